#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "risnoma/montecarlo.hpp"
#include "risnoma/run_config.hpp"

namespace risnoma {

inline constexpr std::string_view kCsvHeader =
    "scheme,n_elements,n_groups,rate_bpcu,c1_sq,snr_eve_db,snr_db,sop_sim,sop_stderr,sop_ci_lo,"
    "sop_ci_hi,sop_analytic,sop_asymptotic";

/// Environment variable naming a directory against which relative output
/// paths are resolved.
inline constexpr const char* kOutputDirEnv = "RISNOMA_OUTPUT_DIR";

/// 6 significant digits, '.' decimal point regardless of locale.
std::string format_number(double value);

void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const Curve& curve, bool emit_analytic = true,
                    bool emit_asymptotic = true);

std::filesystem::path resolve_output_path(const std::filesystem::path& path);

/// Sibling manifest path: "out/fig2.csv" -> "out/fig2.manifest.json".
std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path);

struct RunOutput {
  std::filesystem::path csv;
  std::filesystem::path manifest;
  std::vector<Curve> curves;
};

/// Runs every series of `run`, then writes the CSV and the manifest in one
/// go. Throws std::runtime_error if either file cannot be written.
RunOutput execute_run(const RunConfig& run, std::string_view label);

/// Renders every series of `run` into CSV text without touching the disk.
std::vector<Curve> run_curves(const RunConfig& run);
std::string render_csv(const RunConfig& run, const std::vector<Curve>& curves);

}  // namespace risnoma
