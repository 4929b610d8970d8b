#pragma once

// Per-realization channel draws and SINR / secrecy-rate evaluation for one
// RIS-NOMA user pair and the eavesdropper.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <complex>
#include <cstddef>
#include <span>

#include "risnoma/config.hpp"
#include "risnoma/philox.hpp"

namespace risnoma {

/// Rayleigh amplitude normalized to E[X^2] = 1, so E[X] = sqrt(pi)/2.
inline double sample_rayleigh_amplitude(Substream& rng) { return std::sqrt(-std::log(rng.uniform())); }

/// Exponential with unit mean (power of a unit Rayleigh amplitude).
inline double sample_unit_exponential(Substream& rng) { return -std::log(rng.uniform()); }

/// Uniform phase on [0, 2pi).
inline double sample_phase(Substream& rng) { return 2.0 * M_PI * rng.uniform(); }

/// Circularly-symmetric complex Gaussian with E|z|^2 = 1.
inline std::complex<double> sample_complex_gaussian(Substream& rng) {
  const double r = sample_rayleigh_amplitude(rng);
  return std::polar(r, sample_phase(rng));
}

struct PowerSplit {
  double far;   // c_{m1}^2
  double near;  // c_{m2}^2

  static PowerSplit from_far_share(double c1_sq) { return {c1_sq, 1.0 - c1_sq}; }
};

/// One realization of every channel quantity of one group.
///
/// Under EveModel::Exponential the eavesdropper's per-element terms are not
/// drawn and `residual_phases` is empty.
struct TrialDraw {
  Eigen::ArrayXd alpha;            // S -> RIS amplitudes
  Eigen::ArrayXd beta_user;        // RIS -> far user amplitudes
  Eigen::ArrayXd residual_phases;  // eps_i - delta_i wrapped to [0, 2pi)
  double a_sum = 0.0;              // sum_i alpha_i beta_user_i
  double h2_sq = 0.0;              // near-user power gain, unit mean
  double eve_composite_sq = 0.0;   // B^2, E[B^2] = lambda_E
};

/// Fills `out` in place (reusing its storage).
///
/// Draw order within the stream: alpha, beta_user, h2_sq, then the
/// eavesdropper terms. Callers that need extra per-group variables draw them
/// after this returns.
void draw_trial(const SystemConfig& cfg, const LinkBudget& budget, Substream& rng, TrialDraw& out);

TrialDraw draw_trial(const SystemConfig& cfg, Substream& rng);

// SINR / SNR evaluators. The Eigen overloads return expressions so they
// compose with other array arithmetic without temporaries.

/// Far-user SINR with co-phased RIS reflection; bounded by far/near.
template <std::floating_point Scalar>
Scalar gamma_far(Scalar a_sum, const PowerSplit& split, Scalar snr_ris) {
  const Scalar gain = a_sum * a_sum * snr_ris;
  return gain * Scalar(split.far) / (gain * Scalar(split.near) + Scalar(1));
}

template <typename Derived>
auto gamma_far(const Eigen::ArrayBase<Derived>& a_sum, const PowerSplit& split, double snr_ris) {
  return (a_sum.square() * (snr_ris * split.far)) / (a_sum.square() * (snr_ris * split.near) + 1.0);
}

inline double gamma_far(double a_sum, const SystemConfig& cfg) {
  return gamma_far(a_sum, PowerSplit::from_far_share(cfg.c1_sq), link_budget(cfg).ris);
}

/// Near-user SNR after SIC removed the far user's signal.
template <std::floating_point Scalar>
Scalar gamma_near(Scalar h2_sq, const PowerSplit& split, Scalar snr_near) {
  return h2_sq * Scalar(split.near) * snr_near;
}

inline double gamma_near(double h2_sq, const SystemConfig& cfg) {
  return gamma_near(h2_sq, PowerSplit::from_far_share(cfg.c1_sq), link_budget(cfg).near);
}

/// Eavesdropper SNR for the stream with power share `c_n_sq` (PIC, no
/// inter-user interference).
template <std::floating_point Scalar>
Scalar gamma_eve(Scalar eve_composite_sq, Scalar c_n_sq) {
  return eve_composite_sq * c_n_sq;
}

template <typename Derived>
auto gamma_eve(const Eigen::ArrayBase<Derived>& eve_composite_sq, double c_n_sq) {
  return eve_composite_sq * c_n_sq;
}

/// max{0, log2(1 + legit) - log2(1 + eve)}
template <std::floating_point Scalar>
Scalar secrecy_rate(Scalar snr_legit, Scalar snr_eve) {
  using std::log2;
  using std::max;
  return max(Scalar(0), log2((Scalar(1) + snr_legit) / (Scalar(1) + snr_eve)));
}

struct GroupRates {
  double c_far = 0.0;
  double c_near = 0.0;

  double min_rate() const { return std::min(c_far, c_near); }
};

GroupRates secrecy_rates(const TrialDraw& trial, const PowerSplit& split, const LinkBudget& budget);
GroupRates secrecy_rates(const TrialDraw& trial, const SystemConfig& cfg);

/// Index of the group with the largest min{C_far, C_near}; ties go to the
/// lowest index. Throws std::invalid_argument on an empty span.
std::size_t select_group(std::span<const GroupRates> rates);

}  // namespace risnoma
