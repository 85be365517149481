#include "harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "qgraph/graphalg.hpp"
#include "qgraph/poisson.hpp"
#include "qgraph/qca.hpp"
#include "qgraph/rootcenter.hpp"
#include "qgraph/skein.hpp"

namespace qgraph::harness {

const char* const kVersion = QGRAPH_VERSION;

namespace {

using Builder = std::function<std::vector<Task>(const SuiteConfig&)>;

std::vector<Task> concat(std::vector<Task> a, const std::vector<Task>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r = {
      {"presentation", [](const SuiteConfig& c) { return presentation_suite(c.n); }},
      {"alekseev", [](const SuiteConfig& c) { return alekseev_suite(c.n, c.max_degree); }},
      {"center", [](const SuiteConfig& c) { return center_suite(c.n, c.l, c.override_bounds); }},
      {"frobenius", [](const SuiteConfig& c) { return frobenius_suite(c.n, c.l, c.override_bounds); }},
      {"threading", [](const SuiteConfig& c) { return threading_suite(c.n, c.l, c.override_bounds); }},
      {"qca", [](const SuiteConfig& c) { return qca_suite(c.n, c.l, c.series_order, c.override_bounds); }},
      {"poisson",
       [](const SuiteConfig& c) {
         return concat(poisson_suite(c.n, c.l, c.override_bounds), fr_poisson_suite(c.n, c.l, c.override_bounds));
       }},
      {"dressing", [](const SuiteConfig& c) { return dressing_suite(c.n, c.l, c.override_bounds); }},
      {"skein",
       [](const SuiteConfig& c) {
         std::vector<CurveSpec> curves;
         for (const auto& s : c.curves) curves.push_back(CurveSpec::parse(s, c.l));
         std::vector<Task> t = skein_suite(c.n, c.l, c.override_bounds);
         return curves.empty() ? t : concat(std::move(t), curve_suite(curves, c.n, c.l, c.override_bounds));
       }},
  };
  return r;
}

void validate(const SuiteConfig& c) {
  if (c.n < 1) throw ConfigError("--n must be >= 1");
  if (c.l < 3 || c.l % 2 == 0) throw ConfigError("--l must be odd and >= 3");
  if (c.max_degree < 0) throw ConfigError("--max-degree must be >= 0");
  if (c.series_order < 1) throw ConfigError("--series-order must be >= 1");
  if (c.jobs < 0) throw ConfigError("--jobs must be >= 0");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) throw ConfigError("unknown suite '" + c.suite + "'");
  if (!c.curves.empty() && c.suite != "skein" && c.suite != "all") throw ConfigError("--curve applies to the skein suite");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, b] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<Task> suite_tasks(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<Task> tasks;
  try {
    for (const auto& [name, build] : registry())
      if (cfg.suite == "all" || cfg.suite == name) tasks = concat(std::move(tasks), build(cfg));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return tasks;
}

int resolved_jobs(const SuiteConfig& cfg) {
  if (cfg.jobs > 0) return cfg.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

nlohmann::ordered_json make_report(const SuiteConfig& cfg, const std::vector<Record>& records, bool with_timing) {
  using J = nlohmann::ordered_json;
  J recs = J::array();
  std::map<std::string, int> counts = {{"pass", 0}, {"fail", 0}, {"skipped", 0}};
  for (const Record& r : records) {
    J inputs = J::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    J rec = {{"id", r.id},
             {"statement", r.statement},
             {"inputs", inputs},
             {"status", status_name(r.result.status)},
             {"witness", r.result.witness}};
    if (with_timing) rec["wall_time_ms"] = r.wall_time_ms;
    recs.push_back(std::move(rec));
    ++counts[status_name(r.result.status)];
  }
  J config = {{"suite", cfg.suite},
              {"n", cfg.n},
              {"l", cfg.l},
              {"max_degree", cfg.max_degree},
              {"series_order", cfg.series_order},
              {"override_bounds", cfg.override_bounds},
              {"curves", cfg.curves}};
  if (with_timing) config["jobs"] = resolved_jobs(cfg);
  return J{{"tool", "qgraph"},
           {"version", kVersion},
           {"config", config},
           {"summary",
            {{"total", records.size()}, {"pass", counts["pass"]}, {"fail", counts["fail"]}, {"skipped", counts["skipped"]}}},
           {"records", recs}};
}

}  // namespace qgraph::harness
