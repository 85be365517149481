#pragma once
/// @file report.hpp
/// @brief Identity checks as schedulable tasks, and their records.

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qgraph {

struct CheckResult {
  enum class Status { Pass, Fail, Skipped };
  Status status = Status::Pass;
  std::string witness;  ///< nonzero residual or skip reason

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {Status::Fail, std::move(w)}; }
  static CheckResult skip(std::string why) { return {Status::Skipped, std::move(why)}; }
  static CheckResult expect(bool ok, const std::function<std::string()>& witness) {
    return ok ? pass() : fail(witness());
  }
};

using Inputs = std::vector<std::pair<std::string, std::string>>;

/// One identity to check.
struct Task {
  std::string id;
  std::string statement;
  Inputs inputs;
  std::function<CheckResult()> run;
};

struct Record {
  std::string id;
  std::string statement;
  Inputs inputs;
  CheckResult result;
  double wall_time_ms = 0;
};

/// Runs tasks on up to `jobs` threads; records come back sorted by id.
/// Exceptions thrown by a task become failures carrying the message.
std::vector<Record> run_tasks(std::vector<Task> tasks, int jobs);

const char* status_name(CheckResult::Status s);

}  // namespace qgraph
