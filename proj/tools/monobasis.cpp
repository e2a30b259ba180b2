#include "monobasis/commands.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Options {
  monobasis::CommandParams params;
  std::string format = "json";
  std::string out;
  int threads = 0;
};

void add_common(CLI::App* sub, Options& o)
{
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write the report to PATH instead of stdout");
  sub->add_option("--threads", o.threads, "OpenMP thread count (0 = runtime default)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Monomial bases of level-k extended vertex-operator-algebra modules: exact verification driver"};
  app.require_subcommand(1);
  Options o;
  auto& p = o.params;

  auto* rel = app.add_subcommand("relations", "Quadratic relation spaces, decomposition and closure checks");
  rel->add_option("--k", p.k, "Level")->check(CLI::NonNegativeNumber);
  rel->add_option("--degree-min", p.degree_min, "Lowest degree");
  rel->add_option("--degree-max", p.degree_max, "Highest degree");
  rel->add_option("--window", p.window, "Mode window half-width")->check(CLI::NonNegativeNumber);
  add_common(rel, o);

  auto* bas = app.add_subcommand("basis", "Correlation spaces, triangular pairing and normal forms");
  bas->add_option("--k", p.k, "Level")->check(CLI::PositiveNumber);
  bas->add_option("--s", p.s, "Particle count")->check(CLI::PositiveNumber);
  bas->add_option("--r", p.r, "Boundary parameter")->check(CLI::NonNegativeNumber);
  bas->add_option("--degree-min", p.degree_min, "Lowest degree");
  bas->add_option("--degree-max", p.degree_max, "Highest degree");
  add_common(bas, o);

  auto* chr = app.add_subcommand("character", "Path characters against the Weyl-Kac oracle");
  chr->add_option("--k", p.k, "Level")->check(CLI::PositiveNumber);
  chr->add_option("--r", p.r, "Highest weight label")->check(CLI::NonNegativeNumber);
  chr->add_option("--l", p.l, "Heisenberg label");
  chr->add_option("--cutoff", p.cutoff, "Energy cutoff D")->check(CLI::NonNegativeNumber);
  add_common(chr, o);

  auto* ver = app.add_subcommand("verlinde", "Verlinde algebra of the extended algebra");
  ver->add_option("--k", p.k, "Level")->check(CLI::PositiveNumber);
  add_common(ver, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (p.r > p.k && (bas->parsed() || chr->parsed())) {
    std::cerr << "error: --r must not exceed --k\n";
    return kUsage;
  }
  if (p.degree_min > p.degree_max) {
    std::cerr << "error: --degree-min exceeds --degree-max\n";
    return kUsage;
  }
  if (o.threads > 0)
    omp_set_num_threads(o.threads);

  std::function<monobasis::ReportEnvelope(const monobasis::CommandParams&)> run;
  if (rel->parsed())
    run = monobasis::cmd_relations;
  else if (bas->parsed())
    run = monobasis::cmd_basis;
  else if (chr->parsed())
    run = monobasis::cmd_character;
  else
    run = monobasis::cmd_verlinde;

  monobasis::ReportEnvelope rep;
  try {
    rep = run(p);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string text = (o.format == "csv") ? rep.csv : rep.to_json().dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot open " << o.out << '\n';
      return kUsage;
    }
    f << text;
  }
  if (o.format == "csv")
    for (const auto& a : rep.assertions)
      if (!a.passed)
        std::cerr << "assertion failed: " << a.name << '\n';
  return rep.passed() ? kPass : kFail;
}
