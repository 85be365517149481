#pragma once
/// @file harness.hpp
/// @brief Suite registry and JSON report shared by the CLI and its golden test.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/report.hpp"

namespace qgraph::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string suite = "all";
  int n = 1;
  int l = 3;
  int max_degree = 4;
  int series_order = 4;
  int jobs = 0;  ///< 0: hardware concurrency
  bool override_bounds = false;
  std::vector<std::string> curves;
};

const std::vector<std::string>& suite_names();

/// Tasks of one suite, or of every suite for "all". Throws ConfigError on bad input.
std::vector<Task> suite_tasks(const SuiteConfig& cfg);

/// Report object; wall_time_ms is omitted when with_timing is false.
nlohmann::ordered_json make_report(const SuiteConfig& cfg, const std::vector<Record>& records, bool with_timing = true);

int resolved_jobs(const SuiteConfig& cfg);

extern const char* const kVersion;

}  // namespace qgraph::harness
