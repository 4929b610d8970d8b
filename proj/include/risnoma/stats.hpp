#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <span>

namespace risnoma {

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;       // unbiased
  double fourth_central = 0.0; // biased, for the variance-of-variance estimate
  double count = 0.0;

  double mean_stderr() const { return std::sqrt(variance / count); }
  double variance_stderr() const {
    return std::sqrt(std::max(0.0, fourth_central - variance * variance) / count);
  }
};

template <typename Derived>
SampleMoments sample_moments(const Eigen::ArrayBase<Derived>& x) {
  SampleMoments m;
  m.count = static_cast<double>(x.size());
  m.mean = x.mean();
  const auto centered = (x - m.mean).eval();
  m.variance = centered.square().sum() / (m.count - 1.0);
  m.fourth_central = centered.square().square().mean();
  return m;
}

/// Asymptotic Kolmogorov tail P(sqrt(n) D > t) with the Stephens small-sample
/// correction t = (sqrt(n) + 0.12 + 0.11 / sqrt(n)) D.
inline double kolmogorov_pvalue(double d, double n) {
  const double root_n = std::sqrt(n);
  const double t = (root_n + 0.12 + 0.11 / root_n) * d;
  if (t < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Smallest D rejected at `significance` for n samples.
inline double kolmogorov_critical(double significance, double n) {
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (kolmogorov_pvalue(mid, n) > significance ? lo : hi) = mid;
  }
  return hi;
}

/// Two-sided one-sample KS distance; `sorted` must be ascending.
template <typename Cdf>
double ks_statistic(std::span<const double> sorted, Cdf cdf) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace risnoma
