#include "risnoma/run_config.hpp"

#include <cmath>
#include <stdexcept>

namespace risnoma {

using nlohmann::json;

std::vector<double> SweepRange::points() const {
  std::vector<double> out;
  const double span = stop_db - start_db;
  const auto steps = static_cast<long>(std::floor(span / step_db + 1e-9));
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (long k = 0; k <= steps; ++k) out.push_back(start_db + static_cast<double>(k) * step_db);
  return out;
}

void validate(const RunConfig& run) {
  validate(run.scenario);
  if (!(run.sweep.step_db > 0.0)) throw std::invalid_argument("sweep.step_db must be > 0");
  if (!(run.sweep.start_db <= run.sweep.stop_db))
    throw std::invalid_argument("sweep.start_db must not exceed sweep.stop_db");
  if (run.schemes.empty()) throw std::invalid_argument("schemes must not be empty");
  if (run.output_path.empty()) throw std::invalid_argument("output_path must not be empty");
  for (int n : run.variations.n_elements)
    if (n < 1) throw std::invalid_argument("variations.n_elements entries must be >= 1");
  for (int m : run.variations.n_groups)
    if (m < 1) throw std::invalid_argument("variations.n_groups entries must be >= 1");
  for (double r : run.variations.target_rate)
    if (!(r >= 0.0)) throw std::invalid_argument("variations.target_rate entries must be >= 0");
}

namespace {

constexpr const char* kSnrKeys[] = {"snr_legit_db", "snr_eve_db", "snr_ris_offset_db"};
constexpr const char* kGeometryKeys[] = {"d_sr", "d_ru1", "d_su2", "d_re",
                                         "d_se", "chi",   "es_over_n0", "es_over_ne"};

json geometry_to_json(const Geometry& g) {
  return {{"d_sr", g.d_sr}, {"d_ru1", g.d_ru1}, {"d_su2", g.d_su2},
          {"d_re", g.d_re}, {"d_se", g.d_se},   {"chi", g.chi},
          {"es_over_n0", g.es_over_n0}, {"es_over_ne", g.es_over_ne}};
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw std::invalid_argument("unknown key '" + key + "' in " + std::string(where));
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out, std::string_view where) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("bad value for " + std::string(where) + "." + key + ": " +
                                obj.at(key).dump());
  }
}

Geometry geometry_from_json(const json& obj) {
  if (!obj.is_object()) throw std::invalid_argument("scenario.geometry must be an object");
  reject_unknown(obj, {"d_sr", "d_ru1", "d_su2", "d_re", "d_se", "chi", "es_over_n0", "es_over_ne"},
                 "scenario.geometry");
  Geometry g;
  for (auto [key, field] : {std::pair{"d_sr", &g.d_sr}, {"d_ru1", &g.d_ru1}, {"d_su2", &g.d_su2},
                            {"d_re", &g.d_re}, {"d_se", &g.d_se}, {"chi", &g.chi},
                            {"es_over_n0", &g.es_over_n0}, {"es_over_ne", &g.es_over_ne}}) {
    read(obj, key, *field, "scenario.geometry");
  }
  return g;
}

SystemConfig scenario_from_json(const json& obj) {
  if (!obj.is_object()) throw std::invalid_argument("scenario must be an object");
  reject_unknown(obj,
                 {"n_elements", "n_groups", "c1_sq", "target_rate", "snr_legit_db", "snr_eve_db",
                  "snr_ris_offset_db", "geometry", "eve_model", "seed", "trials"},
                 "scenario");
  SystemConfig cfg;
  read(obj, "n_elements", cfg.n_elements, "scenario");
  read(obj, "n_groups", cfg.n_groups, "scenario");
  read(obj, "c1_sq", cfg.c1_sq, "scenario");
  read(obj, "target_rate", cfg.target_rate, "scenario");
  read(obj, "snr_legit_db", cfg.snr_legit_db, "scenario");
  read(obj, "snr_eve_db", cfg.snr_eve_db, "scenario");
  read(obj, "snr_ris_offset_db", cfg.snr_ris_offset_db, "scenario");
  read(obj, "seed", cfg.seed, "scenario");
  read(obj, "trials", cfg.trials, "scenario");
  if (obj.contains("eve_model")) {
    std::string name;
    read(obj, "eve_model", name, "scenario");
    cfg.eve_model = eve_model_from_string(name);
  }
  if (obj.contains("geometry") && !obj.at("geometry").is_null()) {
    for (const char* key : kSnrKeys) {
      if (obj.contains(key))
        throw std::invalid_argument(std::string("scenario.geometry and scenario.") + key +
                                    " are mutually exclusive");
    }
    cfg.geometry = geometry_from_json(obj.at("geometry"));
  }
  return cfg;
}

}  // namespace

json to_json(const RunConfig& run) {
  const SystemConfig& s = run.scenario;
  json scenario = {{"n_elements", s.n_elements},
                   {"n_groups", s.n_groups},
                   {"c1_sq", s.c1_sq},
                   {"target_rate", s.target_rate},
                   {"eve_model", std::string(to_string(s.eve_model))},
                   {"seed", s.seed},
                   {"trials", s.trials}};
  if (s.geometry) {
    scenario["geometry"] = geometry_to_json(*s.geometry);
  } else {
    scenario["snr_legit_db"] = s.snr_legit_db;
    scenario["snr_eve_db"] = s.snr_eve_db;
    scenario["snr_ris_offset_db"] = s.snr_ris_offset_db;
  }
  json schemes = json::array();
  for (Scheme sc : run.schemes) schemes.push_back(std::string(to_string(sc)));
  json variations = json::object();
  if (!run.variations.n_elements.empty()) variations["n_elements"] = run.variations.n_elements;
  if (!run.variations.n_groups.empty()) variations["n_groups"] = run.variations.n_groups;
  if (!run.variations.target_rate.empty()) variations["target_rate"] = run.variations.target_rate;
  if (!run.variations.snr_eve_db.empty()) variations["snr_eve_db"] = run.variations.snr_eve_db;
  return {{"scenario", scenario},
          {"schemes", schemes},
          {"sweep",
           {{"start_db", run.sweep.start_db},
            {"stop_db", run.sweep.stop_db},
            {"step_db", run.sweep.step_db}}},
          {"variations", variations},
          {"output_path", run.output_path},
          {"emit_analytic", run.emit_analytic},
          {"emit_asymptotic", run.emit_asymptotic},
          {"workers", run.workers}};
}

RunConfig run_config_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("run configuration must be a JSON object");
  reject_unknown(doc,
                 {"scenario", "schemes", "sweep", "variations", "output_path", "emit_analytic",
                  "emit_asymptotic", "workers"},
                 "run configuration");
  RunConfig run;
  if (doc.contains("scenario")) run.scenario = scenario_from_json(doc.at("scenario"));
  if (doc.contains("schemes")) {
    std::vector<std::string> names;
    read(doc, "schemes", names, "run");
    run.schemes.clear();
    for (const auto& n : names) run.schemes.push_back(scheme_from_string(n));
  }
  if (doc.contains("sweep")) {
    const json& sw = doc.at("sweep");
    reject_unknown(sw, {"start_db", "stop_db", "step_db"}, "sweep");
    read(sw, "start_db", run.sweep.start_db, "sweep");
    read(sw, "stop_db", run.sweep.stop_db, "sweep");
    read(sw, "step_db", run.sweep.step_db, "sweep");
  }
  if (doc.contains("variations")) {
    const json& v = doc.at("variations");
    reject_unknown(v, {"n_elements", "n_groups", "target_rate", "snr_eve_db"}, "variations");
    read(v, "n_elements", run.variations.n_elements, "variations");
    read(v, "n_groups", run.variations.n_groups, "variations");
    read(v, "target_rate", run.variations.target_rate, "variations");
    read(v, "snr_eve_db", run.variations.snr_eve_db, "variations");
    for (const auto& [key, value] : v.items()) {
      if (value.is_array() && value.empty())
        throw std::invalid_argument("variations." + key + " must not be empty");
    }
  }
  read(doc, "output_path", run.output_path, "run");
  read(doc, "emit_analytic", run.emit_analytic, "run");
  read(doc, "emit_asymptotic", run.emit_asymptotic, "run");
  read(doc, "workers", run.workers, "run");
  validate(run);
  return run;
}

const std::vector<std::string>& override_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {
        "scenario.n_elements", "scenario.n_groups", "scenario.c1_sq",    "scenario.target_rate",
        "scenario.snr_legit_db", "scenario.snr_eve_db", "scenario.snr_ris_offset_db",
        "scenario.eve_model",  "scenario.seed",     "scenario.trials",
    };
    for (const char* g : kGeometryKeys) k.push_back(std::string("scenario.geometry.") + g);
    for (const char* rest :
         {"schemes", "sweep.start_db", "sweep.stop_db", "sweep.step_db", "variations.n_elements",
          "variations.n_groups", "variations.target_rate", "variations.snr_eve_db", "output_path",
          "emit_analytic", "emit_asymptotic", "workers"}) {
      k.emplace_back(rest);
    }
    return k;
  }();
  return keys;
}

namespace {

json parse_override_value(std::string_view text) {
  const std::string s(text);
  if (auto parsed = json::parse(s, nullptr, false); !parsed.is_discarded()) return parsed;
  if (s.find(',') != std::string::npos) {
    json arr = json::array();
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t comma = std::min(s.find(',', start), s.size());
      arr.push_back(parse_override_value(s.substr(start, comma - start)));
      start = comma + 1;
    }
    return arr;
  }
  return s;
}

}  // namespace

void apply_override(json& doc, std::string_view dotted_key, std::string_view value) {
  const auto& keys = override_keys();
  if (std::find(keys.begin(), keys.end(), dotted_key) == keys.end())
    throw std::invalid_argument("unknown configuration key '" + std::string(dotted_key) + "'");

  std::string pointer = "/" + std::string(dotted_key);
  for (char& c : pointer)
    if (c == '.') c = '/';

  json v = parse_override_value(value);
  // Scalars given for list-valued keys become one-element lists.
  if ((dotted_key == "schemes" || dotted_key.starts_with("variations.")) && !v.is_array())
    v = json::array({v});

  if (dotted_key.starts_with("scenario.geometry.")) {
    if (doc.contains("scenario"))
      for (const char* key : kSnrKeys) doc["scenario"].erase(key);
  } else if (dotted_key.starts_with("scenario.snr_")) {
    if (doc.contains("scenario")) doc["scenario"].erase("geometry");
  }
  doc[json::json_pointer(pointer)] = v;
}

std::string_view to_string(FigurePreset preset) {
  switch (preset) {
    case FigurePreset::Fig2:
      return "fig2";
    case FigurePreset::Fig3:
      return "fig3";
    case FigurePreset::Fig4:
      return "fig4";
    case FigurePreset::Fig5:
      return "fig5";
    case FigurePreset::Fig6:
      return "fig6";
  }
  return "fig2";
}

FigurePreset figure_preset_from_string(std::string_view name) {
  for (FigurePreset p : {FigurePreset::Fig2, FigurePreset::Fig3, FigurePreset::Fig4,
                         FigurePreset::Fig5, FigurePreset::Fig6}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown figure preset '" + std::string(name) +
                              "' (expected fig2, fig3, fig4, fig5 or fig6)");
}

RunConfig figure_preset(FigurePreset preset) {
  RunConfig run;
  SystemConfig& s = run.scenario;
  s.c1_sq = 0.95;
  s.n_groups = 2;
  s.snr_eve_db = 0.0;
  s.seed = 42;
  s.trials = 1'000'000;
  run.sweep = {0.0, 50.0, 5.0};
  run.output_path = std::string(to_string(preset)) + ".csv";

  switch (preset) {
    case FigurePreset::Fig2:  // SOP vs N
      s.target_rate = 0.05;
      run.variations.n_elements = {2, 4, 6};
      break;
    case FigurePreset::Fig3:  // NOMA schemes
      s.n_elements = 5;
      s.target_rate = 0.3;
      run.schemes = {Scheme::RisNoma, Scheme::DirectNoma, Scheme::RelayNoma};
      break;
    case FigurePreset::Fig4:  // NOMA vs OMA
      s.n_elements = 5;
      s.target_rate = 0.3;
      run.schemes = {Scheme::RisNoma, Scheme::RisOma};
      break;
    case FigurePreset::Fig5:  // eavesdropper SNR and target rate
      s.n_elements = 4;
      run.variations.target_rate = {0.1, 0.3};
      run.variations.snr_eve_db = {-5.0, 0.0, 5.0};
      break;
    case FigurePreset::Fig6:  // SOP vs M
      s.n_elements = 7;
      s.target_rate = 0.3;
      run.variations.n_groups = {1, 2, 3};
      break;
  }
  return run;
}

std::vector<SeriesSpec> expand_series(const RunConfig& run) {
  auto or_base = [](const auto& list, auto base) {
    using T = typename std::decay_t<decltype(list)>::value_type;
    return list.empty() ? std::vector<T>{static_cast<T>(base)} : list;
  };
  const SystemConfig& base = run.scenario;
  std::vector<SeriesSpec> out;
  for (int n : or_base(run.variations.n_elements, base.n_elements)) {
    for (int m : or_base(run.variations.n_groups, base.n_groups)) {
      for (double r : or_base(run.variations.target_rate, base.target_rate)) {
        for (double eve : or_base(run.variations.snr_eve_db, base.snr_eve_db)) {
          SystemConfig cfg = base;
          cfg.n_elements = n;
          cfg.n_groups = m;
          cfg.target_rate = r;
          if (!run.variations.snr_eve_db.empty()) {
            if (cfg.geometry)
              throw std::invalid_argument(
                  "variations.snr_eve_db requires the SNR parameterization");
            cfg.snr_eve_db = eve;
          }
          for (Scheme scheme : run.schemes) out.push_back({cfg, scheme});
        }
      }
    }
  }
  return out;
}

}  // namespace risnoma
