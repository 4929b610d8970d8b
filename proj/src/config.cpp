#include "risnoma/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risnoma {

std::string_view to_string(EveModel model) {
  switch (model) {
    case EveModel::Exponential:
      return "exponential";
    case EveModel::Composite:
      return "composite";
  }
  return "exponential";
}

EveModel eve_model_from_string(std::string_view name) {
  if (name == "exponential") return EveModel::Exponential;
  if (name == "composite") return EveModel::Composite;
  throw std::invalid_argument("unknown eavesdropper model '" + std::string(name) +
                              "' (expected exponential or composite)");
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void validate(const SystemConfig& cfg) {
  require(cfg.n_elements >= 1, "n_elements must be >= 1");
  require(cfg.n_groups >= 1, "n_groups must be >= 1");
  require(cfg.c1_sq >= 0.5 && cfg.c1_sq < 1.0, "c1_sq must lie in [0.5, 1)");
  require(std::isfinite(cfg.target_rate) && cfg.target_rate >= 0.0,
          "target_rate must be a non-negative finite number");
  require(cfg.trials >= 1, "trials must be >= 1");
  if (cfg.geometry) {
    const Geometry& g = *cfg.geometry;
    require(positive_finite(g.d_sr) && positive_finite(g.d_ru1) && positive_finite(g.d_su2) &&
                positive_finite(g.d_re) && positive_finite(g.d_se),
            "geometry distances must be positive");
    require(std::isfinite(g.chi) && g.chi >= 2.0, "geometry.chi must be >= 2");
    require(positive_finite(g.es_over_n0) && positive_finite(g.es_over_ne),
            "geometry.es_over_n0 and geometry.es_over_ne must be positive");
  } else {
    require(std::isfinite(cfg.snr_legit_db) && std::isfinite(cfg.snr_eve_db) &&
                std::isfinite(cfg.snr_ris_offset_db),
            "SNR values must be finite");
  }
}

LinkBudget link_budget(const SystemConfig& cfg) {
  LinkBudget lb;
  if (cfg.geometry) {
    const Geometry& g = *cfg.geometry;
    lb.near = g.es_over_n0 * std::pow(g.d_su2, -g.chi);
    lb.ris = g.es_over_n0 * std::pow(g.d_sr * g.d_ru1, -g.chi);
    lb.eve_ris = g.es_over_ne * std::pow(g.d_sr * g.d_re, -g.chi);
    lb.eve_direct = g.es_over_ne * std::pow(g.d_se, -g.chi);
  } else {
    lb.near = db_to_linear(cfg.snr_legit_db);
    lb.ris = db_to_linear(cfg.snr_legit_db + cfg.snr_ris_offset_db);
    lb.eve_ris = db_to_linear(cfg.snr_eve_db);
    lb.eve_direct = lb.eve_ris;
  }
  return lb;
}

SystemConfig with_legit_snr_db(const SystemConfig& cfg, double snr_db) {
  SystemConfig out = cfg;
  if (out.geometry) {
    Geometry& g = *out.geometry;
    g.es_over_n0 = db_to_linear(snr_db) * std::pow(g.d_su2, g.chi);
  } else {
    out.snr_legit_db = snr_db;
  }
  return out;
}

double legit_snr_db(const SystemConfig& cfg) {
  return cfg.geometry ? 10.0 * std::log10(link_budget(cfg).near) : cfg.snr_legit_db;
}

double eve_snr_db(const SystemConfig& cfg) {
  return cfg.geometry ? 10.0 * std::log10(link_budget(cfg).eve_direct) : cfg.snr_eve_db;
}

}  // namespace risnoma
