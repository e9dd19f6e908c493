#include <gtest/gtest.h>

#include <json.hpp>

#include "levytree/error.hpp"
#include "levytree/report.hpp"
#include "levytree/suites.hpp"

namespace levytree {
namespace {

TEST(Suites, Names) {
  const std::vector<std::string> expected{"identities",   "invariants",    "moments", "subordinator",
                                          "subcritical", "supercritical", "zoom",    "sampler"};
  EXPECT_EQ(suite_names(), expected);
  EXPECT_THROW(run_suite("nope", {}), ConfigError);
}

TEST(Suites, IdentitiesPassWithoutMonteCarlo) {
  const SuiteReport r = run_suite("identities", {});
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.checks.size(), 4u * 5u);
  EXPECT_EQ(to_json(r), to_json(run_suite("identities", {})));
}

TEST(Suites, InvariantsPass) { EXPECT_TRUE(run_suite("invariants", {}).passed()); }

TEST(Suites, ZeroReplicatesIsAConfigError) {
  SuiteConfig c;
  c.replicates = 0;
  EXPECT_THROW(run_suite("moments", c), ConfigError);
  c.replicates = 1;
  EXPECT_THROW(run_suite("subordinator", c), ConfigError);
}

TEST(Suites, ReportDoesNotDependOnWorkerCount) {
  SuiteConfig c;
  c.replicates = 40;
  c.grid = 512;
  c.threads = 1;
  const std::string one = to_json(run_suite("moments", c));
  c.threads = 3;
  EXPECT_EQ(one, to_json(run_suite("moments", c)));
}

TEST(Report, JsonShape) {
  SuiteReport r;
  r.suite = "x";
  r.seed = 9;
  r.add_band("a", 1.0, 1.05, 0.1, "d");
  r.add_band("b", 1.0, std::nan(""), 0.1, "");
  EXPECT_FALSE(r.passed());
  const auto doc = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["suite"], "x");
  EXPECT_EQ(doc["checks"].size(), 2u);
  EXPECT_TRUE(doc["checks"][0]["passed"].get<bool>());
  EXPECT_TRUE(doc["checks"][1]["estimate"].is_null());
  EXPECT_NE(to_text(r).find("suite x: FAIL"), std::string::npos);
}

}  // namespace
}  // namespace levytree
