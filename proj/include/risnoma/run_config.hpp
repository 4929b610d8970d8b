#pragma once

// Experiment manifests: a JSON document mirroring RunConfig, dotted-key
// overrides for every leaf, and the figure presets.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "risnoma/config.hpp"
#include "risnoma/montecarlo.hpp"

namespace risnoma {

struct SweepRange {
  double start_db = 0.0;
  double stop_db = 50.0;
  double step_db = 5.0;

  /// start, start + step, ... up to stop (inclusive within 1e-9 of a step).
  std::vector<double> points() const;
};

/// Optional lists over which the scenario is varied; each non-empty list adds
/// a Cartesian-product dimension of series.
struct Variations {
  std::vector<int> n_elements;
  std::vector<int> n_groups;
  std::vector<double> target_rate;
  std::vector<double> snr_eve_db;
};

struct RunConfig {
  SystemConfig scenario;
  std::vector<Scheme> schemes{Scheme::RisNoma};
  SweepRange sweep;
  Variations variations;
  std::string output_path = "sop.csv";
  bool emit_analytic = true;
  bool emit_asymptotic = true;
  unsigned workers = 1;
};

/// Throws std::invalid_argument on the first violated constraint.
void validate(const RunConfig& run);

nlohmann::json to_json(const RunConfig& run);

/// Strict: unknown keys, wrong types and mixing geometry with SNR keys are
/// rejected with std::invalid_argument.
RunConfig run_config_from_json(const nlohmann::json& doc);

/// Every dotted key accepted by apply_override (e.g. "scenario.n_elements").
const std::vector<std::string>& override_keys();

/// Sets `dotted_key` in `doc`. The value is parsed as JSON when possible;
/// a bare comma list ("2,4,6", "ris_noma,ris_oma") becomes an array and any
/// other text a string. Setting a geometry key drops the SNR keys and vice
/// versa, so exactly one parameterization remains.
void apply_override(nlohmann::json& doc, std::string_view dotted_key, std::string_view value);

enum class FigurePreset { Fig2, Fig3, Fig4, Fig5, Fig6 };

std::string_view to_string(FigurePreset preset);
FigurePreset figure_preset_from_string(std::string_view name);

/// Scenario grids of the five figures; seed 42 and 10^6 trials per point.
RunConfig figure_preset(FigurePreset preset);

struct SeriesSpec {
  SystemConfig config;
  Scheme scheme;
};

/// Expands variations (N, M, R, eavesdropper SNR, in that nesting order) and
/// schemes (innermost) into concrete series.
std::vector<SeriesSpec> expand_series(const RunConfig& run);

}  // namespace risnoma
