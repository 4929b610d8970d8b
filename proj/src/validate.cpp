#include "risnoma/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "risnoma/analytic.hpp"
#include "risnoma/channel.hpp"
#include "risnoma/stats.hpp"

namespace risnoma {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::NotApplicable:
      return "N/A";
  }
  return "FAIL";
}

bool DistributionReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

namespace {

std::string format(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

CheckResult ks_check(std::string name, Eigen::ArrayXd& samples, int n_elements, double significance,
                     auto cdf, double& distance_out) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  const double d = ks_statistic(std::span<const double>(samples.data(), samples.size()), cdf);
  const double p = kolmogorov_pvalue(d, n);
  distance_out = d;

  CheckResult r{std::move(name), CheckStatus::Pass, d, kolmogorov_critical(significance, n), {}};
  if (n_elements < kCltMinElements) {
    r.status = CheckStatus::NotApplicable;
    r.detail = "CLT regime not reached (N < 8); " + format("D = %.5f, p = %.3g", d, p);
  } else {
    r.status = p >= significance ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = format("D = %.5f, p = %.3g", d, p);
  }
  return r;
}

}  // namespace

DistributionReport validate_distributions(const SystemConfig& cfg_in, double significance) {
  SystemConfig cfg = cfg_in;
  cfg.eve_model = EveModel::Composite;
  validate(cfg);

  const int n_el = cfg.n_elements;
  const LinkBudget budget = link_budget(cfg);
  const auto dc = derive_constants(cfg);
  const auto samples = static_cast<Eigen::Index>(cfg.trials);

  Eigen::ArrayXd a_sum(samples);
  Eigen::ArrayXd b_sq(samples);
  TrialDraw draw;
  for (Eigen::Index i = 0; i < samples; ++i) {
    Substream rng(cfg.seed, static_cast<std::uint64_t>(i), 0);
    draw_trial(cfg, budget, rng, draw);
    a_sum[i] = draw.a_sum;
    b_sq[i] = draw.eve_composite_sq;
  }

  DistributionReport report;
  report.n_elements = n_el;
  report.samples = cfg.trials;
  report.lambda_nc = dc.lambda_nc;
  report.sigma_sq = dc.sigma_sq;
  report.lambda_e = dc.lambda_e;

  const SampleMoments am = sample_moments(a_sum);
  const double mean_z = std::abs(am.mean - clt_mean(n_el)) / am.mean_stderr();
  report.checks.push_back({"A mean", mean_z <= 3.0 ? CheckStatus::Pass : CheckStatus::Fail, mean_z,
                           3.0, format("sample %.6f vs N*pi/4 = %.6f", am.mean, clt_mean(n_el))});
  const double var_z = std::abs(am.variance - clt_variance(n_el)) / am.variance_stderr();
  report.checks.push_back(
      {"A variance", var_z <= 3.0 ? CheckStatus::Pass : CheckStatus::Fail, var_z, 3.0,
       format("sample %.6f vs N(1-pi^2/16) = %.6f", am.variance, clt_variance(n_el))});

  const double b_mean = b_sq.mean();
  const double b_rel = std::abs(b_mean / dc.lambda_e - 1.0);
  report.checks.push_back({"B^2 mean", b_rel <= 0.01 ? CheckStatus::Pass : CheckStatus::Fail, b_rel,
                           0.01, format("sample %.6f vs lambda_E = %.6f", b_mean, dc.lambda_e)});

  Eigen::ArrayXd a_sq = a_sum.square();
  report.checks.push_back(ks_check(
      "A^2 KS vs CLT law", a_sq, n_el, significance,
      [n_el](double y) { return cdf_a_squared(y, n_el); }, report.ks_a_squared));
  const double lambda_e = dc.lambda_e;
  report.checks.push_back(ks_check(
      "B^2 KS vs Exp(lambda_E)", b_sq, n_el, significance,
      [lambda_e](double y) { return cdf_b_squared(y, lambda_e); }, report.ks_b_squared));
  return report;
}

void print_report(std::ostream& os, const DistributionReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "N = %d, samples = %llu, lambda = %.6g, sigma^2 = %.6g, lambda_E = %.6g\n",
                r.n_elements, static_cast<unsigned long long>(r.samples), r.lambda_nc, r.sigma_sq,
                r.lambda_e);
  os << buf;
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%-5s %-26s stat = %-12.6g threshold = %-10.6g %s\n",
                  std::string(to_string(c.status)).c_str(), c.name.c_str(), c.statistic,
                  c.threshold, c.detail.c_str());
    os << buf;
  }
}

}  // namespace risnoma
