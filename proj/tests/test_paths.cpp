#include "monobasis/normal_order.hpp"
#include "monobasis/paths.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace monobasis;

namespace {

std::vector<Generator> prefix_of(const Path& p)
{
  return p.prefix();
}

}  // namespace

TEST_CASE("ground-state examples")
{
  const auto p = ground_state_path(2, 0, 0, 4);
  CHECK(p.prefix() == std::vector<Generator>{{2, 2}, {0, 2}, {2, 4}, {0, 4}});
  const auto q = ground_state_path(1, 0, 0, 4);
  CHECK(q.prefix() == std::vector<Generator>{{1, 1}, {0, 1}, {1, 2}, {0, 2}});
  CHECK(local_energy({2, 2}, {0, 2}, 2) == 2);
  for (int k = 1; k <= 4; ++k)
    for (int r = 0; r <= k; ++r)
      for (int l = 0; l <= 2; ++l) {
        const auto g = ground_state_path(k, r, l, 10);
        CHECK(g.is_valid());
        CHECK(g.is_reduced());
        CHECK(g.last_deviation() == 0);
        CHECK(g.entry(15) == Generator{ground_color(k, r, 15), ground_mode(k, r, l, 15)});
      }
}

TEST_CASE("vacuum_bound examples")
{
  CHECK(vacuum_bound(2, 0, 0, 2) == 0);
  CHECK(vacuum_bound(2, 0, 0, 0) == 0);
  for (int k = 1; k <= 4; ++k)
    for (int j = 0; j <= k; ++j)
      for (int l = -2; l <= 2; ++l)
        CHECK(vacuum_bound(k, j, l, j) == -l);
}

TEST_CASE("vacuum saturation along the ground state")
{
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= k; ++r)
      for (int l = 0; l <= 1; ++l)
        CHECK(vacuum_saturation_check(k, r, l, 20));
}

TEST_CASE("path_weight examples")
{
  const auto gs = ground_state_path(2, 0, 0, 3);
  CHECK(path_weight(gs).alpha1_offset == 0);
  CHECK(path_weight(gs).delta_offset == 0);
  auto pre = prefix_of(gs);
  pre[0].color -= 1;
  const auto w1 = path_weight(Path(2, 0, 0, pre));
  CHECK(w1.alpha1_offset == 1);
  CHECK(w1.delta_offset == 0);
  pre = prefix_of(gs);
  pre[0].mode -= 1;
  const auto w2 = path_weight(Path(2, 0, 0, pre));
  CHECK(w2.alpha1_offset == 0);
  CHECK(w2.delta_offset == -1);
}

TEST_CASE("enumerate_paths at zero cutoff")
{
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= k; ++r) {
      const auto oracle = kac_character(k, r, 0);
      CHECK(oracle.coefficient(0, 0) == 1);
      const auto all = enumerate_paths(k, r, 0, 0);
      CHECK(static_cast<std::int64_t>(all.paths.size()) == oracle.grade_total(0));
      int top = 0;
      for (const auto& p : all.paths)
        if (path_weight(p).alpha1_offset == 0) {
          ++top;
          CHECK(p.last_deviation() == 0);
        }
      CHECK(top == 1);
      const auto red = enumerate_paths(k, r, 0, 0, true);
      CHECK(red.paths.size() == all.paths.size());
    }
}

TEST_CASE("k=1 path count at energy one matches the oracle")
{
  const auto paths = enumerate_paths(1, 0, 0, 1);
  std::int64_t at_one = 0;
  for (const auto& p : paths.paths)
    at_one += (-path_weight(p).delta_offset == 1);
  CHECK(at_one == kac_character(1, 0, 1).grade_total(1));
}

TEST_CASE("enumerated paths are valid and respect the vacuum bound")
{
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= k; ++r) {
      const auto e = enumerate_paths(k, r, 1, 5);
      for (const auto& p : e.paths) {
        CHECK(p.is_valid());
        CHECK(respects_vacuum_bound(p));
        CHECK(-path_weight(p).delta_offset <= 5);
        CHECK(-path_weight(p).delta_offset >= 0);
      }
    }
}

TEST_CASE("energy-sum identity on reduced paths")
{
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= k; ++r)
      for (const auto& p : enumerate_paths(k, r, 0, 6, true).paths) {
        CHECK(p.is_reduced());
        CHECK(energy_sum_check(p));
      }
  CHECK(energy_sum_check(ground_state_path(2, 1, 0, 6)));
  auto pre = ground_state_path(2, 0, 0, 4).prefix();
  pre[0].mode -= 1;
  const Path excited(2, 0, 0, pre);
  REQUIRE_FALSE(excited.is_reduced());
  CHECK_THROWS_AS(energy_sum_check(excited), std::invalid_argument);
}

TEST_CASE("serial and parallel enumeration agree")
{
  const auto a = enumerate_paths(3, 1, 0, 6, false, Exec::serial);
  const auto b = enumerate_paths(3, 1, 0, 6, false, Exec::parallel);
  CHECK(a.paths == b.paths);
  CHECK(path_series(a.paths, 6) == path_series(b.paths, 6));
}

TEST_CASE("partition numbers")
{
  const auto p = partition_numbers(10);
  CHECK(p == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
}

TEST_CASE("level-one oracle examples")
{
  const auto ch = kac_character(1, 0, 4, false);
  CHECK(ch.coefficient(0, 0) == 1);
  CHECK(ch.grade_total(0) == 1);
  CHECK(ch.coefficient(0, 1) == 1);
  CHECK(ch.coefficient(1, 1) == 1);
  CHECK(ch.coefficient(-1, 1) == 1);
  CHECK(ch == frenkel_kac_level_one(4));
  CHECK(kac_character(1, 0, 10, false) == frenkel_kac_level_one(10));
}

TEST_CASE("k=1 path character is the basic character times the Fock factor")
{
  const auto pc = path_character(1, 0, 0, 7);
  CHECK(pc.full == series_multiply(frenkel_kac_level_one(7), inverse_euler_factor(7)));
}

TEST_CASE("path characters")
{
  for (int r = 0; r <= 2; ++r) {
    const auto pc = path_character(2, r, 0, 6);
    CHECK(pc.factorization_holds);
    CHECK(pc.horizon_stable);
    CHECK(pc.full == kac_character(2, r, 6));
    CHECK(pc.full.non_negative());
    CHECK(pc.full.coefficient(0, 0) == 1);
  }
  CHECK(path_character(3, 1, 0, 5).full == path_character(3, 1, 1, 5).full);
}
