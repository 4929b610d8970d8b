#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

namespace risnoma {

/// Distance-based link budget. All distances in meters, SNR factors linear.
struct Geometry {
  double d_sr = 1.0;   // source -> RIS
  double d_ru1 = 1.0;  // RIS -> far user
  double d_su2 = 1.0;  // source -> near user
  double d_re = 1.0;   // RIS -> eavesdropper
  double d_se = 1.0;   // source -> eavesdropper
  double chi = 2.0;    // path-loss exponent
  double es_over_n0 = 1.0;
  double es_over_ne = 1.0;
};

/// How the eavesdropper's composite gain B^2 is drawn.
///
/// `Exponential` draws B^2 ~ Exp(mean lambda_E), the law the closed-form
/// analysis is derived under. `Composite` sums the direct path and the N
/// reflected paths with the RIS phased for the far user, which is only
/// approximately exponential.
enum class EveModel { Exponential, Composite };

std::string_view to_string(EveModel model);
EveModel eve_model_from_string(std::string_view name);

struct SystemConfig {
  int n_elements = 4;   // reflecting elements per RIS
  int n_groups = 2;     // user pairs, one RIS each
  double c1_sq = 0.95;  // far-user power share; near user gets 1 - c1_sq
  double target_rate = 0.05;  // bits per channel use

  // SNR parameterization, used when `geometry` is empty.
  double snr_legit_db = 20.0;       // near-user average SNR
  double snr_eve_db = 0.0;          // both eavesdropper links
  double snr_ris_offset_db = 0.0;   // far-user per-element RIS path relative to snr_legit_db

  std::optional<Geometry> geometry;

  EveModel eve_model = EveModel::Exponential;
  std::uint64_t seed = 42;
  std::uint64_t trials = 1'000'000;

  double c2_sq() const { return 1.0 - c1_sq; }
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SystemConfig& cfg);

/// Linear average SNRs resolved from either parameterization.
struct LinkBudget {
  double near = 1.0;        // Es / (N0 d_SU2^chi)
  double ris = 1.0;         // Es / (N0 d_SR^chi d_RU1^chi)
  double eve_ris = 1.0;     // Es / (N_E d_SR^chi d_RE^chi)
  double eve_direct = 1.0;  // Es / (N_E d_SE^chi)

  double lambda_e(int n_elements) const { return n_elements * eve_ris + eve_direct; }
};

LinkBudget link_budget(const SystemConfig& cfg);

/// Returns a copy whose near-user average SNR equals `snr_db`. Under the
/// geometry parameterization Es/N0 is rescaled, so the far-user RIS path moves
/// with it.
SystemConfig with_legit_snr_db(const SystemConfig& cfg, double snr_db);

/// Effective near-user average SNR in dB for either parameterization.
double legit_snr_db(const SystemConfig& cfg);

/// Effective direct eavesdropper SNR in dB for either parameterization.
double eve_snr_db(const SystemConfig& cfg);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace risnoma
