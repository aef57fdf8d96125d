#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "cgv/parser.hpp"
#include "cgv/suites.hpp"

namespace cgv {
namespace {

TEST(EvalExpr, Examples) {
  EXPECT_EQ(eval_expr("r^3+r^2"), "1");
  EXPECT_EQ(eval_expr("9*r^6-12*r^5+4*r^4+6*r^3+11*r^2-25*r+10"), "0");
  EXPECT_EQ(eval_expr("(3*r-2)*(r+1)"), "-2 + r + 3*r^2");
  EXPECT_EQ(eval_expr("X*(Y+m)"), "X*Y + X*m");
  EXPECT_THROW(eval_expr("r +"), ParseError);
}

TEST(MakeReport, AgreementRule) {
  EXPECT_EQ(make_report("a", "1", PaperClaim{"1", "c"}).agreement, Agreement::confirmed);
  EXPECT_EQ(make_report("a", "2", PaperClaim{"1", "c"}).agreement, Agreement::refuted);
  EXPECT_EQ(make_report("a", "1", std::nullopt).agreement, Agreement::indeterminate);
  EXPECT_EQ(make_report("a", "1", PaperClaim{"1", "c"}, {}, false).agreement, Agreement::indeterminate);
  EXPECT_EQ(make_unresolved_report("a", "1", PaperClaim{"1", "c"}).agreement, Agreement::indeterminate);
}

TEST(RunSuite, Divisors) {
  const auto report = run_suite("divisors", {});
  ASSERT_EQ(report.checks.size(), 4u);
  EXPECT_EQ(report.summary.confirmed, 4u);
  EXPECT_EQ(report.summary.errors, 0u);
  EXPECT_EQ(exit_code(report), 0);
}

TEST(RunSuite, ConfigErrors) {
  EXPECT_THROW(run_suite("nope", {}), ConfigError);
  RunConfig bad_m;
  bad_m.m = "1+";
  EXPECT_THROW(run_suite("sigma", bad_m), ConfigError);
  RunConfig symbolic_m;
  symbolic_m.m = "X";
  EXPECT_THROW(run_suite("sigma", symbolic_m), ConfigError);
  RunConfig zero_survey;
  zero_survey.survey = 0;
  EXPECT_THROW(run_suite("tangent", zero_survey), ConfigError);
  RunConfig zero_bound;
  zero_bound.bound = 0;
  EXPECT_THROW(run_suite("pencil", zero_bound), ConfigError);
}

TEST(RunSuite, AllIsDeterministic) {
  const auto a = run_suite("all", {});
  const auto b = run_suite("all", {});
  EXPECT_EQ(to_text(a), to_text(b));
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_TRUE(a.errors.empty());
  EXPECT_EQ(a.summary.errors, 0u);
}

TEST(RunSuite, AllIsConcatenationOfSuites) {
  const auto all = run_suite("all", {});
  std::size_t total = 0;
  for (auto name : kSuiteNames) total += run_suite(name, {}).checks.size();
  EXPECT_EQ(all.checks.size(), total);
}

TEST(RunSuite, BaseLocusAtMOne) {
  RunConfig config;
  config.m = "1";
  const auto report = run_suite("base-locus", config);
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.check_id != "base-locus.kernel-lift.T") continue;
    found = true;
    EXPECT_EQ(c.computed, "reference points only");
    EXPECT_EQ(c.agreement, Agreement::confirmed);
    ASSERT_FALSE(c.notes.empty());
    EXPECT_EQ(c.notes[0], "m = 1");
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(report.m, std::optional<std::string>("1"));
}

TEST(RunSuite, ClaimsCarryCitations) {
  for (const auto& c : run_suite("all", {}).checks) {
    if (!c.paper_claim) {
      EXPECT_EQ(c.agreement, Agreement::indeterminate) << c.check_id;
      continue;
    }
    EXPECT_FALSE(c.paper_claim->citation.empty()) << c.check_id;
    if (c.agreement == Agreement::confirmed) EXPECT_EQ(c.computed, c.paper_claim->value) << c.check_id;
  }
}

TEST(Json, RoundTrip) {
  for (auto name : kSuiteNames) {
    const auto report = run_suite(name, {});
    EXPECT_EQ(suite_report_from_json(to_json(report)), report) << name;
  }
  RunConfig config;
  config.m = "r+1";
  config.timing = true;
  const auto timed = run_suite("pencil", config);
  EXPECT_EQ(suite_report_from_json(to_json(timed)), timed);
  EXPECT_THROW(suite_report_from_json("{"), std::invalid_argument);
  EXPECT_THROW(suite_report_from_json("{\"suite\": 3}"), std::invalid_argument);
}

TEST(Json, SchemaUsesStringsOnly) {
  const auto j = nlohmann::json::parse(to_json(run_suite("genus", {})));
  for (const char* key : {"suite", "config", "checks", "summary"}) EXPECT_TRUE(j.contains(key)) << key;
  for (const auto& [k, v] : j["config"].items()) EXPECT_TRUE(v.is_string() || v.is_null()) << k;
  for (const auto& [k, v] : j["summary"].items()) EXPECT_TRUE(v.is_string()) << k;
  for (const auto& c : j["checks"]) {
    for (const char* key : {"check_id", "computed", "paper_claim", "agreement", "notes", "elapsed_ms"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
    EXPECT_TRUE(c["elapsed_ms"].is_string());
  }
}

TEST(Text, SummaryLine) {
  const auto text = to_text(run_suite("sigma", {}));
  EXPECT_NE(text.find("[confirmed] sigma.order: 4"), std::string::npos);
  EXPECT_NE(text.find("summary: 4 confirmed, 0 refuted, 0 indeterminate, 0 errors"), std::string::npos);
}

}  // namespace
}  // namespace cgv
