#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "voalab/checks.hpp"
#include "voalab/report.hpp"

using namespace voalab;

TEST(Registry, UniqueSortedIds) {
  const auto& r = check_registry();
  std::set<std::string> ids;
  for (const auto& c : r) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (std::size_t k = 1; k < r.size(); ++k) EXPECT_LT(r[k - 1].id, r[k].id);
}

TEST(Registry, EveryCriterionHasChecks) {
  for (int c = 1; c <= 10; ++c) EXPECT_FALSE(select_checks({"criterion:" + std::to_string(c)}).empty()) << c;
}

TEST(Registry, Selection) {
  EXPECT_EQ(select_checks({"u9-norm"}), std::vector<std::string>{"u9-norm"});
  EXPECT_EQ(select_checks({"all"}).size(), check_registry().size());
  EXPECT_GE(select_checks({"mode-products"}).size(), 12u);
  EXPECT_THROW(select_checks({"no-such-check"}), std::invalid_argument);
}

TEST(RunChecks, NormPasses) {
  const Report r = run_checks({"u9-norm"}, Config{});
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, Status::Pass);
  EXPECT_EQ(r.checks[0].computed, "5400");
  EXPECT_EQ(r.pass, 1);
}

TEST(RunChecks, CoverageMetaCheck) {
  const Report r = run_checks({"registry-coverage"}, Config{});
  EXPECT_EQ(r.checks[0].status, Status::Pass) << r.checks[0].computed;
}

TEST(RunChecks, EmptySelection) {
  const Report r = run_checks({}, Config{});
  EXPECT_TRUE(r.checks.empty());
  EXPECT_EQ(r.fail, 0);
}

TEST(RunChecks, ParallelMatchesSerial) {
  const std::vector<std::string> ids = {"mode-product-E3E", "mode-product-J0E", "sigma-on-J", "form-on-E-and-J"};
  const Report a = run_checks(ids, Config{}, 1), b = run_checks(ids, Config{}, 3);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    EXPECT_EQ(a.checks[k].id, b.checks[k].id);
    EXPECT_EQ(a.checks[k].computed, b.checks[k].computed);
  }
}

TEST(RunChecks, FindingKeepsBothValues) {
  const Report r = run_checks({"c-virasoro-powers"}, Config{});
  EXPECT_EQ(r.checks[0].status, Status::Finding);
  EXPECT_EQ(r.checks[0].computed, "1/2, 1/4, 1/8");
  EXPECT_EQ(r.checks[0].expected, "2, 4, 8");
  EXPECT_EQ(r.finding, 1);
}

TEST(Report, EmptyJson) {
  const auto j = nlohmann::json::parse(report_json(Report{}));
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(j["summary"]["pass"], 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["finding"], 0);
  EXPECT_TRUE(j.contains("version"));
  EXPECT_TRUE(j.contains("config"));
}

TEST(Report, SinglePassText) {
  const Report r = run_checks({"u9-norm"}, Config{});
  const std::string t = report_text(r);
  EXPECT_NE(t.find("u9-norm"), std::string::npos);
  EXPECT_NE(t.find("1 passed"), std::string::npos);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 2);
}

TEST(Report, JsonStableExceptTimings) {
  const std::vector<std::string> ids = {"u9-norm", "sigma-on-E"};
  auto strip = [](Report r) {
    for (auto& c : r.checks) c.ms = 0;
    return report_json(r);
  };
  EXPECT_EQ(strip(run_checks(ids, Config{})), strip(run_checks(ids, Config{})));
}
