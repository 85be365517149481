// qgraph: run verification suites and write a JSON report.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "harness.hpp"

using namespace qgraph;

int main(int argc, char** argv) {
  harness::SuiteConfig cfg;
  std::string report_path;
  bool no_timing = false;

  CLI::App app{"Exact verification suites for quantum graph algebras of sl(2)"};
  app.set_version_flag("--version", harness::kVersion);
  app.add_option("--suite", cfg.suite, "Suite to run")->check(CLI::IsMember(harness::suite_names()));
  app.add_option("--n", cfg.n, "Number of punctures");
  app.add_option("--l", cfg.l, "Odd order of the root of unity");
  app.add_option("--max-degree", cfg.max_degree, "Degree bound for the alekseev suite");
  app.add_option("--series-order", cfg.series_order, "Truncation order for the qca suite");
  app.add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
  app.add_option("--report", report_path, "Write the JSON report here instead of stdout");
  app.add_option("--curve", cfg.curves, "Extra curve for the skein suite, e.g. arc:1..2^l");
  app.add_flag("--override-bounds", cfg.override_bounds, "Run checks beyond their default size bounds");
  app.add_flag("--no-timing", no_timing, "Omit wall times and job count, for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<Task> tasks;
  try {
    tasks = harness::suite_tasks(cfg);
  } catch (const harness::ConfigError& e) {
    std::cerr << "qgraph: " << e.what() << "\n";
    return 2;
  }

  std::vector<Record> records = run_tasks(std::move(tasks), harness::resolved_jobs(cfg));
  auto report = harness::make_report(cfg, records, !no_timing);
  const std::string text = report.dump(2) + "\n";

  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "qgraph: cannot write " << report_path << "\n";
      return 2;
    }
    out << text;
    const auto& s = report["summary"];
    std::cerr << "total " << s["total"] << ", pass " << s["pass"] << ", fail " << s["fail"] << ", skipped "
              << s["skipped"] << "\n";
  }
  for (const Record& r : records)
    if (r.result.status == CheckResult::Status::Fail) std::cerr << "FAIL " << r.id << ": " << r.result.witness << "\n";
  return report["summary"]["fail"].get<int>() > 0 ? 1 : 0;
}
