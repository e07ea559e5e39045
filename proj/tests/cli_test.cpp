#include <gtest/gtest.h>

#include "gw/cli/cases.hpp"

using namespace gw;
using namespace gw::cli;

namespace {

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Config, ParsesKeysSectionsAndComments) {
  auto cfg = parse_config(R"(# sheaf on two charts
case = "sheaf"
bound = 6   # smaller
samples=5
[params]
cover = ["X", "Y^2"]  # second chart
)");
  EXPECT_EQ(cfg.name, "sheaf");
  EXPECT_EQ(cfg.bound, 6);
  EXPECT_EQ(cfg.samples, 5);
  EXPECT_FALSE(cfg.depth);
  ASSERT_EQ(cfg.params.at("cover").size(), 2u);
  EXPECT_EQ(cfg.params.at("cover")[1], "Y^2");
}

TEST(Config, Errors) {
  for (const char* bad : {"bound = 0", "bound = -3", "depth = \"x\"", "colour = 3", "bound 4", "case = sheaf",
                          "[other]\nx = \"1\"", "[params]\ncover = 3", "[params]\ncover = [\"X\" \"Y\"]",
                          "case = \"cusp", "bound = 4 5", "[params]\nx = \"1\"\nx = \"2\""})
    EXPECT_THROW(parse_config(bad), ConfigError) << bad;
  EXPECT_NO_THROW(parse_config("\n# nothing\n"));
}

TEST(Cases, UnknownCaseAndBadConfig) {
  EXPECT_THROW(run_case("nope"), ConfigError);
  CaseConfig cfg;
  cfg.params["cover"] = {"X"};
  EXPECT_THROW(run_case("sheaf", cfg), ConfigError);
  cfg.params["cover"] = {"X", "Y +"};
  EXPECT_THROW(run_case("sheaf", cfg), ConfigError);
  CaseConfig other;
  other.name = "cusp";
  EXPECT_THROW(run_case("sheaf", other), ConfigError);
  CaseConfig extra;
  extra.params["letters"] = {"X"};
  EXPECT_THROW(run_case("cusp", extra), ConfigError);
}

TEST(Cases, CuspBodyContainsX4) {
  auto r = run_case("cusp");
  const Check* c = find_check(r, "localized body contains X^4");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Pass) << c->witness;
  EXPECT_EQ(r.status(), Status::Pass);
  EXPECT_EQ(r.bounds.front(), (std::pair<std::string, int>{"bound", 12}));
}

TEST(Cases, WeylHolonomicWitness) {
  auto r = run_case("weyl-holonomic");
  const Check* chi = find_check(r, "(X) lies in the characteristic variety");
  const Check* xi = find_check(r, "(X) excluded from the strong characteristic variety");
  ASSERT_TRUE(chi && xi);
  EXPECT_EQ(chi->status, Status::Pass);
  EXPECT_EQ(xi->status, Status::Pass);
  EXPECT_NE(xi->witness.find("excluded(xi, X)"), std::string::npos) << xi->witness;
}

TEST(Cases, ConfigParametersReachTheCase) {
  // word filters of the single letter X
  CaseConfig cfg;
  cfg.params["letters"] = {"X"};
  auto r = run_case("words", cfg);
  const Check* c = find_check(r, "Q[X,Y] is not schematic for these letters");
  ASSERT_NE(c, nullptr);
  // (X^0) is the unit ideal, (X^1) is proper
  EXPECT_EQ(c->status, Status::Pass);
  EXPECT_EQ(c->witness, "(X^1) is proper");
}

TEST(Report, JsonSchemaAndDeterminism) {
  auto r = run_case("xy-minus-one");
  std::string a = report_json(r), b = report_json(run_case("xy-minus-one"));
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["case"], "xy-minus-one");
  EXPECT_EQ(j["bounds"]["bound"], 8);
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    for (const char* k : {"name", "status", "witness", "anchor"}) EXPECT_TRUE(c.contains(k)) << k;
    EXPECT_TRUE(c["status"] == "pass" || c["status"] == "fail" || c["status"] == "inconclusive");
  }
  EXPECT_FALSE(j.contains("cases"));
}

TEST(Report, TextCounts) {
  Report r{"demo", {{"bound", 3}}, {pass("a"), fail("b", "w"), inconclusive("c", "bound 3")}, {}};
  std::string t = report_text(r);
  EXPECT_NE(t.find("demo (bound 3)"), std::string::npos);
  EXPECT_NE(t.find("pass 1, fail 1, inconclusive 1"), std::string::npos) << t;
  EXPECT_EQ(r.status(), Status::Fail);
}

TEST(Suite, EmptyListSucceeds) {
  auto r = verify_suite({});
  EXPECT_TRUE(r.cases.empty());
  EXPECT_EQ(r.status(), Status::Pass);
  EXPECT_EQ(report_json(r), report_json(verify_suite({})));
}

TEST(Suite, TightBoundNeverFails) {
  CaseConfig cfg;
  cfg.bound = 2;
  auto r = verify_suite({"xy-minus-one", "filtration-laws", "tower", "cusp"}, cfg);
  EXPECT_EQ(r.count(Status::Fail), 0u) << report_text(r);
  EXPECT_GT(r.count(Status::Inconclusive), 0u);
  ASSERT_EQ(r.cases.size(), 4u);
  EXPECT_EQ(r.cases[0].case_name, "xy-minus-one");
}

TEST(Suite, RaisingTheBoundKeepsPasses) {
  for (int bound : {4, 6}) {
    CaseConfig lo, hi;
    lo.bound = bound;
    hi.bound = bound + 2;
    auto a = run_case("xyt", lo), b = run_case("xyt", hi);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
      if (a.checks[i].status == Status::Pass) {
        EXPECT_NE(b.checks[i].status, Status::Fail) << a.checks[i].name;
      }
  }
}
