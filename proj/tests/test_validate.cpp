#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "risnoma/analytic.hpp"
#include "risnoma/philox.hpp"
#include "risnoma/stats.hpp"
#include "risnoma/validate.hpp"

using namespace risnoma;

namespace {

SystemConfig small_config(int n_elements, std::uint64_t trials) {
  SystemConfig cfg;
  cfg.n_elements = n_elements;
  cfg.trials = trials;
  cfg.snr_eve_db = 0.0;
  return cfg;
}

const CheckResult& find_check(const DistributionReport& r, std::string_view prefix) {
  for (const auto& c : r.checks)
    if (c.name.starts_with(prefix)) return c;
  throw std::runtime_error("no check named " + std::string(prefix));
}

}  // namespace

TEST(Kolmogorov, PValueBoundaries) {
  EXPECT_EQ(kolmogorov_pvalue(0.0, 1000), 1.0);
  EXPECT_LT(kolmogorov_pvalue(0.5, 1000), 1e-12);
  // Asymptotic 1% point of the Kolmogorov law is 1.6276.
  EXPECT_NEAR(kolmogorov_pvalue(1.6276 / std::sqrt(1e6), 1e6), 0.01, 2e-4);
}

TEST(Kolmogorov, CriticalValueInvertsPValue) {
  EXPECT_NEAR(kolmogorov_critical(0.01, 1e6), 1.6276e-3, 2e-6);
  for (double alpha : {0.001, 0.01, 0.05, 0.2}) {
    const double d = kolmogorov_critical(alpha, 5000);
    EXPECT_NEAR(kolmogorov_pvalue(d, 5000), alpha, 1e-6);
  }
}

TEST(KsStatistic, ExactSamplesPass) {
  // Exponential samples drawn by inversion must not be rejected.
  Substream rng(17, 0, 0);
  std::vector<double> x(100000);
  for (double& v : x) v = -5.0 * std::log(rng.uniform());
  std::sort(x.begin(), x.end());
  const double d = ks_statistic(x, [](double y) { return cdf_b_squared(y, 5.0); });
  EXPECT_GT(kolmogorov_pvalue(d, x.size()), 0.01);
  const double wrong = ks_statistic(x, [](double y) { return cdf_b_squared(y, 4.5); });
  EXPECT_LT(kolmogorov_pvalue(wrong, x.size()), 1e-6);
}

TEST(KsStatistic, FoldedGaussianSamplesMatchASquaredLaw) {
  // A ~ N(m, s^2) exactly, so A^2 follows the law the checker compares against.
  constexpr int n_el = 16;
  Substream rng(3, 0, 0);
  const double m = clt_mean(n_el);
  const double s = std::sqrt(clt_variance(n_el));
  std::vector<double> y(100000);
  for (double& v : y) {
    const double r = std::sqrt(-2.0 * std::log(rng.uniform()));
    const double z = r * std::cos(2.0 * M_PI * rng.uniform());
    v = (m + s * z) * (m + s * z);
  }
  std::sort(y.begin(), y.end());
  const double d = ks_statistic(y, [](double t) { return cdf_a_squared(t, n_el); });
  EXPECT_GT(kolmogorov_pvalue(d, y.size()), 0.01);
}

TEST(SampleMomentsTest, KnownValues) {
  Eigen::ArrayXd x(4);
  x << 1.0, 2.0, 3.0, 4.0;
  const SampleMoments m = sample_moments(x);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
  EXPECT_EQ(m.count, 4.0);
}

TEST(ValidateDistributions, ReportStructure) {
  const DistributionReport r = validate_distributions(small_config(16, 20000));
  EXPECT_EQ(r.n_elements, 16);
  EXPECT_EQ(r.samples, 20000u);
  EXPECT_NEAR(r.lambda_nc, std::pow(16 * M_PI / 4.0, 2), 1e-9);
  EXPECT_NEAR(r.sigma_sq, 16 * (1.0 - M_PI * M_PI / 16.0), 1e-12);
  EXPECT_NEAR(r.lambda_e, 17.0, 1e-12);
  EXPECT_EQ(r.checks.size(), 5u);
  EXPECT_EQ(find_check(r, "A mean").status, CheckStatus::Pass);
  EXPECT_EQ(find_check(r, "A variance").status, CheckStatus::Pass);
  EXPECT_NE(find_check(r, "A^2 KS").status, CheckStatus::NotApplicable);
  std::ostringstream os;
  print_report(os, r);
  EXPECT_NE(os.str().find("A mean"), std::string::npos);
}

TEST(ValidateDistributions, SmallArraysSkipKs) {
  const DistributionReport r = validate_distributions(small_config(1, 5000));
  const CheckResult& ks = find_check(r, "A^2 KS");
  EXPECT_EQ(ks.status, CheckStatus::NotApplicable);
  EXPECT_NE(ks.detail.find("CLT regime not reached"), std::string::npos);
  EXPECT_EQ(find_check(r, "B^2 KS").status, CheckStatus::NotApplicable);
}

TEST(ValidateDistributions, Deterministic) {
  const auto a = validate_distributions(small_config(8, 5000));
  const auto b = validate_distributions(small_config(8, 5000));
  EXPECT_EQ(a.ks_a_squared, b.ks_a_squared);
  EXPECT_EQ(a.ks_b_squared, b.ks_b_squared);
}

TEST(ValidateDistributions, StatusNames) {
  EXPECT_EQ(to_string(CheckStatus::Pass), "PASS");
  EXPECT_EQ(to_string(CheckStatus::Fail), "FAIL");
  EXPECT_EQ(to_string(CheckStatus::NotApplicable), "N/A");
}
