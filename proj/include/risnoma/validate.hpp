#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "risnoma/config.hpp"

namespace risnoma {

/// Below this many elements A is too far from Gaussian for the CLT law to be
/// a meaningful goodness-of-fit target; the KS checks report NotApplicable.
inline constexpr int kCltMinElements = 8;

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double statistic = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct DistributionReport {
  int n_elements = 0;
  std::uint64_t samples = 0;
  double lambda_nc = 0.0;
  double sigma_sq = 0.0;
  double lambda_e = 0.0;
  double ks_a_squared = 0.0;   // KS distance, A^2 vs CLT law
  double ks_b_squared = 0.0;   // KS distance, B^2 vs Exp(lambda_E)
  std::vector<CheckResult> checks;

  /// True when no check failed (NotApplicable does not count as failure).
  bool all_passed() const;
};

/// Draws `cfg.trials` realizations of A and of the physical composite B^2
/// (the eavesdropper model in cfg is ignored) and checks them against the CLT
/// moments, the A^2 law and Exp(lambda_E).
DistributionReport validate_distributions(const SystemConfig& cfg, double significance = 0.01);

void print_report(std::ostream& os, const DistributionReport& report);

}  // namespace risnoma
