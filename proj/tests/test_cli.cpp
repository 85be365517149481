#include <fstream>

#include <gtest/gtest.h>

#include "harness.hpp"

using namespace qgraph;
using harness::SuiteConfig;

namespace {

nlohmann::ordered_json run(const SuiteConfig& cfg) {
  return harness::make_report(cfg, run_tasks(harness::suite_tasks(cfg), 4), false);
}

}  // namespace

TEST(Cli, GoldenAllN1L3) {
  std::ifstream in(QGRAPH_GOLDEN_DIR "/all_n1_l3.json");
  ASSERT_TRUE(in) << "missing golden file";
  auto golden = nlohmann::ordered_json::parse(in);
  SuiteConfig cfg;
  auto got = run(cfg);
  ASSERT_EQ(got["summary"], golden["summary"]);
  ASSERT_EQ(got["records"].size(), golden["records"].size());
  for (size_t i = 0; i < got["records"].size(); ++i) EXPECT_EQ(got["records"][i], golden["records"][i]) << i;
  EXPECT_EQ(got["config"], golden["config"]);
}

TEST(Cli, KnownFailuresAreSameSiteFrPoisson) {
  auto got = run(SuiteConfig{});
  for (const auto& r : got["records"])
    if (r["status"] == "fail") EXPECT_EQ(r["id"].get<std::string>().rfind("frpoisson.", 0), 0u) << r["id"];
}

TEST(Cli, RecordsAreSortedAndComplete) {
  SuiteConfig cfg;
  cfg.suite = "presentation";
  cfg.n = 2;
  auto got = run(cfg);
  std::string prev;
  for (const auto& r : got["records"]) {
    for (const char* k : {"id", "statement", "inputs", "status", "witness"}) EXPECT_TRUE(r.contains(k)) << k;
    EXPECT_LT(prev, r["id"].get<std::string>());
    prev = r["id"];
  }
  EXPECT_EQ(got["summary"]["fail"], 0);
}

TEST(Cli, ConfigErrors) {
  SuiteConfig cfg;
  cfg.suite = "nonsense";
  EXPECT_THROW(harness::suite_tasks(cfg), harness::ConfigError);
  cfg = {};
  cfg.l = 6;
  EXPECT_THROW(harness::suite_tasks(cfg), harness::ConfigError);
  cfg = {};
  cfg.suite = "center";
  cfg.curves = {"outer"};
  EXPECT_THROW(harness::suite_tasks(cfg), harness::ConfigError);
  cfg = {};
  cfg.suite = "skein";
  cfg.curves = {"loop:1"};
  EXPECT_THROW(harness::suite_tasks(cfg), harness::ConfigError);
}

TEST(Cli, CurveOptionAddsTasks) {
  SuiteConfig cfg;
  cfg.suite = "skein";
  cfg.n = 2;
  size_t base = harness::suite_tasks(cfg).size();
  cfg.curves = {"arc:1..2^l", "boundary:2"};
  EXPECT_EQ(harness::suite_tasks(cfg).size(), base + 2);
}
