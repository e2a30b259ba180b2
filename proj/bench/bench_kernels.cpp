#include "monobasis/correlation.hpp"
#include "monobasis/paths.hpp"

#include <benchmark/benchmark.h>

namespace {

using monobasis::Exec;

void pairing_matrix_bench(benchmark::State& state, Exec exec)
{
  const int k = 3, s = 3, r = 0;
  const int degree = static_cast<int>(-state.range(0));
  const auto kappas = monobasis::normal_ordered_monomials(k, s, r, degree);
  for (auto _ : state)
    benchmark::DoNotOptimize(monobasis::pairing_matrix(k, kappas, exec));
  state.counters["rows"] = static_cast<double>(kappas.size());
}

void path_enumeration_bench(benchmark::State& state, Exec exec)
{
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(monobasis::enumerate_paths(3, 1, 0, cutoff, false, exec));
}

}  // namespace

BENCHMARK_CAPTURE(pairing_matrix_bench, serial, Exec::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pairing_matrix_bench, parallel, Exec::parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(path_enumeration_bench, serial, Exec::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(path_enumeration_bench, parallel, Exec::parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
