#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "risnoma/config.hpp"

namespace risnoma {

enum class Scheme {
  RisNoma,     // RIS-assisted NOMA, the analysed system
  DirectNoma,  // far user served over one Rayleigh link, no RIS
  RelayNoma,   // half-duplex decode-and-forward relay in place of the RIS
  RisOma,      // RIS-assisted, users in two orthogonal half slots
};

std::string_view to_string(Scheme scheme);
Scheme scheme_from_string(std::string_view name);

struct SopEstimate {
  double value = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t outages = 0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  /// Wald interval clamped to [0, 1].
  static SopEstimate from_counts(std::uint64_t outages, std::uint64_t trials);
};

struct EngineOptions {
  /// Worker threads; 0 means hardware concurrency. Never changes results.
  unsigned workers = 1;
};

/// Minimum of the two per-user secrecy rates of one group drawn from the
/// (seed, trial, group) substream.
double group_min_rate(const SystemConfig& cfg, Scheme scheme, std::uint64_t trial,
                      std::uint32_t group);

/// Fraction of trials in which every one of the M groups has
/// min{C_far, C_near} < R (so the max-min selected group fails too).
SopEstimate estimate_sop(const SystemConfig& cfg, Scheme scheme, const EngineOptions& opts = {});

struct CurvePoint {
  double snr_db = 0.0;
  SopEstimate sop_sim;
  std::optional<double> sop_analytic;
  std::optional<double> sop_asymptotic;
};

struct Curve {
  Scheme scheme = Scheme::RisNoma;
  SystemConfig config;
  std::vector<CurvePoint> points;  // ascending, unique snr_db
};

/// One point per distinct SNR (sorted ascending). Analytic and asymptotic
/// columns are filled only for RisNoma. Throws std::invalid_argument on an
/// empty list.
Curve sweep(const SystemConfig& cfg, Scheme scheme, std::span<const double> snr_db_list,
            const EngineOptions& opts = {});

}  // namespace risnoma
