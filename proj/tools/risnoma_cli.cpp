// risnoma: secrecy outage simulation and closed-form evaluation for
// RIS-assisted NOMA downlinks.
//
//   risnoma sop      [--config run.json] [--scenario.snr_legit_db 30] ...
//   risnoma sweep    --config run.json --out sweep.csv
//   risnoma figure   fig2 [--trials 100000] [--workers 8]
//   risnoma validate [--scenario.n_elements 16] [--trials 1000000]

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "risnoma/report.hpp"
#include "risnoma/run_config.hpp"
#include "risnoma/validate.hpp"

namespace {

using nlohmann::json;
using namespace risnoma;

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::string> out;
  std::map<std::string, std::string> dotted;
};

void add_common_flags(CLI::App& app, CommonFlags& flags) {
  app.add_option("--config", flags.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--trials", flags.trials, "Monte Carlo trials per point (scenario.trials)");
  app.add_option("--seed", flags.seed, "master RNG seed (scenario.seed)");
  app.add_option("--workers", flags.workers, "worker threads, 0 = all cores; never changes results");
  app.add_option("--out", flags.out, "output CSV path (output_path)");
  for (const std::string& key : override_keys()) {
    if (key == "workers") continue;  // shortcut flag above
    app.add_option_function<std::string>(
           "--" + key, [&flags, key](const std::string& v) { flags.dotted[key] = v; },
           "override " + key)
        ->group("Configuration keys");
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

RunConfig resolve(json doc, const CommonFlags& flags) {
  if (!flags.config_path.empty()) {
    const json patch = load_json(flags.config_path);
    // The file picks the parameterization; drop the base document's other one.
    if (patch.contains("scenario") && patch["scenario"].is_object()) {
      const json& sc = patch["scenario"];
      if (sc.contains("geometry") && !sc["geometry"].is_null()) {
        for (const char* key : {"snr_legit_db", "snr_eve_db", "snr_ris_offset_db"})
          doc["scenario"].erase(key);
      }
    }
    doc.merge_patch(patch);
  }
  for (const auto& [key, value] : flags.dotted) apply_override(doc, key, value);
  if (flags.trials) doc["scenario"]["trials"] = *flags.trials;
  if (flags.seed) doc["scenario"]["seed"] = *flags.seed;
  if (flags.workers) doc["workers"] = *flags.workers;
  if (flags.out) doc["output_path"] = *flags.out;
  return run_config_from_json(doc);
}

int run_sop(const CommonFlags& flags) {
  RunConfig run = resolve(to_json(RunConfig{}), flags);
  const double snr = legit_snr_db(run.scenario);
  run.sweep = {snr, snr, 1.0};
  const auto curves = run_curves(run);
  const std::string csv = render_csv(run, curves);
  if (flags.out) {
    const auto path = resolve_output_path(run.output_path);
    std::ofstream out(path, std::ios::binary);
    out << csv;
    if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
    std::cerr << "wrote " << path.string() << '\n';
  } else {
    std::cout << csv;
  }
  return 0;
}

int run_sweep(const CommonFlags& flags) {
  const RunConfig run = resolve(to_json(RunConfig{}), flags);
  const RunOutput out = execute_run(run, "sweep");
  std::cerr << "wrote " << out.csv.string() << " and " << out.manifest.string() << '\n';
  return 0;
}

int run_figure(const std::string& preset_name, const CommonFlags& flags) {
  const FigurePreset preset = figure_preset_from_string(preset_name);
  const RunConfig run = resolve(to_json(figure_preset(preset)), flags);
  const RunOutput out = execute_run(run, to_string(preset));
  std::cerr << "wrote " << out.csv.string() << " and " << out.manifest.string() << '\n';
  return 0;
}

int run_validate(const CommonFlags& flags, double significance) {
  const RunConfig run = resolve(to_json(RunConfig{}), flags);
  const DistributionReport report = validate_distributions(run.scenario, significance);
  print_report(std::cout, report);
  std::cout << (report.all_passed() ? "all checks passed" : "some checks failed") << '\n';
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage probability of RIS-assisted NOMA downlinks"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto* sop = app.add_subcommand("sop", "simulate and evaluate a single operating point");
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep the near-user SNR and write a CSV");
  auto* figure = app.add_subcommand("figure", "reproduce a figure preset (fig2 .. fig6)");
  auto* validate_cmd =
      app.add_subcommand("validate", "check simulated channel statistics against their laws");

  std::string preset;
  figure->add_option("preset", preset, "fig2, fig3, fig4, fig5 or fig6")->required();
  double significance = 0.01;
  validate_cmd->add_option("--significance", significance, "KS significance level");

  for (CLI::App* sub : {sop, sweep_cmd, figure, validate_cmd}) add_common_flags(*sub, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sop) return run_sop(flags);
    if (*sweep_cmd) return run_sweep(flags);
    if (*figure) return run_figure(preset, flags);
    if (*validate_cmd) return run_validate(flags, significance);
  } catch (const std::invalid_argument& e) {
    std::cerr << "risnoma: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "risnoma: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
