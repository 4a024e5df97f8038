#pragma once

#include <string>

#include "json.hpp"
#include "ppm/floer.hpp"
#include "ppm/group.hpp"

namespace ppm::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string group = "Z2";
  std::string ga = "1";
  std::string gb = "1";
  int cutoff = 24;
  int winding = -1;  // -1: cutoff / 2
  Convention convention = Convention::AppendixA;
  std::string format = "json";
  std::string out;
};

struct RunResult {
  int exit_code = 0;
  Json report;
  std::string first_failure;
};

// Builds the report for config.command; exit code 0 if every check passed,
// 1 on a failed check, 2 if the configuration is invalid.
RunResult run(const RunConfig& config);

std::string to_markdown(const Json& report);

}  // namespace ppm::cli
