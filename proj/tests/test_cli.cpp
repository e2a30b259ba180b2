#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args)
{
  const std::string cmd = std::string(MONOBASIS_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path)
{
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes")
{
  CHECK(run("verlinde --k 2") == 0);
  CHECK(run("relations --k 1") == 0);
  CHECK(run("character --k 1 --cutoff 4 --format csv") == 0);
  CHECK(run("basis --k 2 --s 2 --degree-min -2 --degree-max 0 --threads 2") == 0);
  CHECK(run("") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("verlinde --k 0") == 2);
  CHECK(run("basis --k 2 --r 3") == 2);
  CHECK(run("relations --degree-min 1 --degree-max 0") == 2);
  CHECK(run("verlinde --format xml") == 2);
  CHECK(run("verlinde --bogus 1") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("json report written to --out")
{
  const std::string path = "cli_report_test.json";
  REQUIRE(run("verlinde --k 3 --out " + path) == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j.at("schema") == "1");
  CHECK(j.at("command") == "verlinde");
  CHECK(j.at("params").at("k") == 3);
  CHECK(j.at("passed") == true);
  CHECK(j.at("data").at("basis").size() == 6);
  std::remove(path.c_str());
}

TEST_CASE("csv character table")
{
  const std::string path = "cli_report_test.csv";
  REQUIRE(run("character --k 1 --cutoff 2 --format csv --out " + path) == 0);
  const auto text = slurp(path);
  CHECK(text.rfind("alpha1_offset,energy,multiplicity\n0,0,1\n", 0) == 0);
  std::remove(path.c_str());
}
