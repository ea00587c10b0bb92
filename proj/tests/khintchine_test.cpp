#include <gtest/gtest.h>

#include <cmath>

#include "freelp/error.hpp"
#include "freelp/random.hpp"
#include "freelp/report.hpp"
#include "freelp/suites.hpp"

using namespace freelp;

TEST(KhintchineTest, CounterexampleLowerEstimate) {
  const KhintchineReport r = khintchine_report(transpose_counterexample(2), 4.0);
  EXPECT_TRUE(r.lp_exact);
  ASSERT_EQ(r.checks.size(), 3u);
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_TRUE(c.conclusive);
  }
  for (std::size_t k = 0; k < r.splits.splits.size(); ++k) {
    EXPECT_NEAR(r.ratios[k], r.lp_lower / r.splits.splits[k].norm, 1e-15);
  }
}

TEST(KhintchineTest, DegreeOneSandwich) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const CoeffTensor t = random_tensor(1 + seed % 4, 1, 1 + seed % 3, Alphabet::generators, seed);
    for (int p : {2, 4, 6}) {
      const KhintchineReport r = khintchine_report(t, p);
      ASSERT_EQ(r.checks.size(), 3u);
      for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " p=" << p;
    }
  }
}

TEST(KhintchineTest, ZeroTensorPassesVacuously) {
  const KhintchineReport r = khintchine_report(CoeffTensor(2, 2, 1), 4.0);
  EXPECT_EQ(r.lp_lower, 0.0);
  for (double ratio : r.ratios) EXPECT_EQ(ratio, 0.0);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass);
}

TEST(KhintchineTest, InfinityIsAnInterval) {
  const CoeffTensor t = random_tensor(2, 2, 2, Alphabet::generators, 3);
  KhintchineOptions o;
  o.depth = 3;
  const KhintchineReport r = khintchine_report(t, Exponent::infinity(), o);
  EXPECT_FALSE(r.lp_exact);
  EXPECT_LE(r.lp_lower, r.lp_upper);
  const Json j = to_json(r);
  EXPECT_EQ(j["lp"]["p"], "inf");
  EXPECT_TRUE(j["lp"]["value"].contains("lower"));
  EXPECT_TRUE(j["lp"]["value"].contains("upper"));
}

TEST(KhintchineTest, RejectsOddExponents) {
  EXPECT_THROW(khintchine_report(CoeffTensor(2, 1, 1), 3.0), Error);
  EXPECT_THROW(khintchine_report(CoeffTensor(2, 1, 1), 1.5), Error);
}

TEST(TranspositionTermsTest, Counterexample) {
  // a_ij = e_ji: sum_i a_ij a_ij^* = sum_i e_jj = n e_jj, so A = C = sqrt(n); B = 1.
  const TranspositionTerms t = transposition_terms(transpose_counterexample(3));
  EXPECT_NEAR(t.a, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(t.c, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(t.b, 1.0, 1e-12);
}

TEST(ReportTest, NormReportJsonShape) {
  const NormReport r = intersection_norm(transpose_counterexample(2), Exponent::infinity());
  const Json j = to_json(r);
  EXPECT_EQ(j["p"], "inf");
  ASSERT_EQ(j["splits"].size(), 3u);
  EXPECT_EQ(j["splits"][1]["alpha"], Json::array({1}));
  EXPECT_EQ(j["splits"][1]["T"], -1);
  EXPECT_EQ(j["splits"][1]["transposed"], false);
  EXPECT_EQ(j["argmax_k"], 0);
  EXPECT_FALSE(j.contains("gap"));

  const NormReport s = sum_norm(random_tensor(2, 2, 1, Alphabet::generators, 1), 2.0);
  const Json js = to_json(s);
  for (const char* key : {"upper", "lower", "gap", "converged"}) EXPECT_TRUE(js.contains(key));
}

TEST(ReportTest, CsvRows) {
  const NormReport r = partition_spectrum(transpose_counterexample(2), 2.0);
  const std::string csv = to_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,alpha,norm,T,transposed");
}

TEST(SuiteTest, EverySuitePasses) {
  SuiteOptions o;
  o.instances = 3;
  const auto results = run_suites("all", o);
  ASSERT_EQ(results.size(), suite_names().size());
  for (const auto& r : results) {
    EXPECT_FALSE(r.cases.empty()) << r.suite;
    for (const auto& c : r.cases) EXPECT_TRUE(c.pass) << r.suite << ": " << c.description;
  }
  EXPECT_THROW(run_suites("nope"), Error);
}

TEST(SuiteTest, CounterexampleCaseCount) {
  const auto results = run_suites("counterexample");
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].cases.size(), 4u * 3u * 6u);
}
