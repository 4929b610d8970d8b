#include "risnoma/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace risnoma {

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_rows(std::ostream& os, const Curve& curve, bool emit_analytic, bool emit_asymptotic) {
  const SystemConfig& cfg = curve.config;
  const std::string prefix = std::string(to_string(curve.scheme)) + ',' +
                             std::to_string(cfg.n_elements) + ',' + std::to_string(cfg.n_groups) +
                             ',' + format_number(cfg.target_rate) + ',' + format_number(cfg.c1_sq) +
                             ',' + format_number(eve_snr_db(cfg)) + ',';
  for (const CurvePoint& pt : curve.points) {
    os << prefix << format_number(pt.snr_db) << ',' << format_number(pt.sop_sim.value) << ','
       << format_number(pt.sop_sim.std_error) << ',' << format_number(pt.sop_sim.ci_low) << ','
       << format_number(pt.sop_sim.ci_high) << ',';
    if (emit_analytic && pt.sop_analytic) os << format_number(*pt.sop_analytic);
    os << ',';
    if (emit_asymptotic && pt.sop_asymptotic) os << format_number(*pt.sop_asymptotic);
    os << '\n';
  }
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / path;
  return path;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path out = csv_path;
  out.replace_extension(".manifest.json");
  return out;
}

std::vector<Curve> run_curves(const RunConfig& run) {
  validate(run);
  const EngineOptions opts{run.workers};
  std::vector<Curve> curves;
  const std::vector<double> snrs = run.sweep.points();
  for (const SeriesSpec& series : expand_series(run)) {
    curves.push_back(sweep(series.config, series.scheme, snrs, opts));
  }
  return curves;
}

std::string render_csv(const RunConfig& run, const std::vector<Curve>& curves) {
  std::ostringstream os;
  write_csv_header(os);
  for (const Curve& c : curves) write_csv_rows(os, c, run.emit_analytic, run.emit_asymptotic);
  return os.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

RunOutput execute_run(const RunConfig& run, std::string_view label) {
  RunOutput result;
  result.csv = resolve_output_path(run.output_path);
  result.manifest = manifest_path_for(result.csv);
  result.curves = run_curves(run);

  nlohmann::json series = nlohmann::json::array();
  for (const Curve& c : result.curves) {
    series.push_back({{"scheme", std::string(to_string(c.scheme))},
                      {"n_elements", c.config.n_elements},
                      {"n_groups", c.config.n_groups},
                      {"target_rate", c.config.target_rate},
                      {"c1_sq", c.config.c1_sq},
                      {"snr_eve_db", eve_snr_db(c.config)},
                      {"points", c.points.size()}});
  }
  const nlohmann::json manifest = {{"label", std::string(label)},
                                   {"csv", result.csv.filename().string()},
                                   {"csv_header", std::string(kCsvHeader)},
                                   {"run", to_json(run)},
                                   {"series", series}};

  write_file(result.csv, render_csv(run, result.curves));
  write_file(result.manifest, manifest.dump(2) + "\n");
  return result;
}

}  // namespace risnoma
