#pragma once

#include "monobasis/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monobasis {

struct CommandParams {
  int k = 2;
  int s = 2;
  int r = 0;
  int l = 0;
  int degree_min = -4;
  int degree_max = 0;
  int cutoff = 6;
  int window = 8;
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReportEnvelope {
  std::string command;
  Json params = Json::object();
  std::string status = "ok";  // "ok" or "not applicable"
  std::vector<Assertion> assertions;
  Json data = Json::object();
  std::string csv;  // primary table for --format csv
  double wall_time_seconds = 0.0;

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = {});
  Json to_json() const;
};

ReportEnvelope cmd_relations(const CommandParams& p);
ReportEnvelope cmd_basis(const CommandParams& p);
ReportEnvelope cmd_character(const CommandParams& p);
ReportEnvelope cmd_verlinde(const CommandParams& p);

}  // namespace monobasis
