#include "qgraph/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace qgraph {

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass:
      return "pass";
    case CheckResult::Status::Fail:
      return "fail";
    case CheckResult::Status::Skipped:
      return "skipped";
  }
  return "fail";
}

std::vector<Record> run_tasks(std::vector<Task> tasks, int jobs) {
  std::vector<Record> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < tasks.size(); k = next++) {
      Task& t = tasks[k];
      Record& r = out[k];
      r.id = t.id;
      r.statement = t.statement;
      r.inputs = t.inputs;
      auto t0 = std::chrono::steady_clock::now();
      try {
        r.result = t.run();
      } catch (const std::exception& e) {
        r.result = CheckResult::fail(std::string("exception: ") + e.what());
      }
      r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), [](const Record& a, const Record& b) { return a.id < b.id; });
  return out;
}

}  // namespace qgraph
