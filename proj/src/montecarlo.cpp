#include "risnoma/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "risnoma/analytic.hpp"
#include "risnoma/channel.hpp"

namespace risnoma {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::RisNoma:
      return "ris_noma";
    case Scheme::DirectNoma:
      return "direct_noma";
    case Scheme::RelayNoma:
      return "relay_noma";
    case Scheme::RisOma:
      return "ris_oma";
  }
  return "ris_noma";
}

Scheme scheme_from_string(std::string_view name) {
  for (Scheme s : {Scheme::RisNoma, Scheme::DirectNoma, Scheme::RelayNoma, Scheme::RisOma}) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (expected ris_noma, direct_noma, relay_noma or ris_oma)");
}

SopEstimate SopEstimate::from_counts(std::uint64_t outages, std::uint64_t trials) {
  SopEstimate est;
  est.trials = trials;
  est.outages = outages;
  if (trials == 0) return est;
  const double n = static_cast<double>(trials);
  est.value = static_cast<double>(outages) / n;
  est.std_error = std::sqrt(est.value * (1.0 - est.value) / n);
  est.ci_low = std::max(0.0, est.value - 1.96 * est.std_error);
  est.ci_high = std::min(1.0, est.value + 1.96 * est.std_error);
  return est;
}

namespace {

// Per-worker evaluator; owns the scratch draw so the hot loop does not
// allocate.
class GroupEvaluator {
 public:
  GroupEvaluator(const SystemConfig& cfg, Scheme scheme)
      : cfg_(cfg), scheme_(scheme), budget_(link_budget(cfg)),
        split_(PowerSplit::from_far_share(cfg.c1_sq)) {}

  double min_rate(std::uint64_t trial, std::uint32_t group) {
    Substream rng(cfg_.seed, trial, group);
    draw_trial(cfg_, budget_, rng, draw_);
    const double eve = draw_.eve_composite_sq;
    const double near = gamma_near(draw_.h2_sq, split_, budget_.near);

    switch (scheme_) {
      case Scheme::RisNoma:
        return secrecy_rates(draw_, split_, budget_).min_rate();

      case Scheme::DirectNoma: {
        const double g_sq = sample_unit_exponential(rng);
        const double far = gamma_far(std::sqrt(g_sq), split_, budget_.ris);
        return std::min(secrecy_rate(far, gamma_eve(eve, split_.far)),
                        secrecy_rate(near, gamma_eve(eve, split_.near)));
      }

      case Scheme::RelayNoma: {
        // Both hops carry the same superposition; the far user's stream
        // survives only if the relay and the far user each decode it.
        const double hop1 = gamma_far(std::sqrt(sample_unit_exponential(rng)), split_, budget_.ris);
        const double hop2 = gamma_far(std::sqrt(sample_unit_exponential(rng)), split_, budget_.ris);
        const double far = std::min(hop1, hop2);
        return 0.5 * std::min(secrecy_rate(far, gamma_eve(eve, split_.far)),
                              secrecy_rate(near, gamma_eve(eve, split_.near)));
      }

      case Scheme::RisOma: {
        // Full power in each half slot, no inter-user interference.
        const double far = draw_.a_sum * draw_.a_sum * budget_.ris;
        const double near_full = draw_.h2_sq * budget_.near;
        return 0.5 * std::min(secrecy_rate(far, eve), secrecy_rate(near_full, eve));
      }
    }
    return 0.0;
  }

 private:
  const SystemConfig& cfg_;
  Scheme scheme_;
  LinkBudget budget_;
  PowerSplit split_;
  TrialDraw draw_;
};

std::uint64_t count_outages(const SystemConfig& cfg, Scheme scheme, std::uint64_t begin,
                            std::uint64_t end) {
  GroupEvaluator eval(cfg, scheme);
  const double target = cfg.target_rate;
  std::uint64_t outages = 0;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    bool served = false;
    for (int m = 0; m < cfg.n_groups && !served; ++m) {
      served = eval.min_rate(trial, static_cast<std::uint32_t>(m)) >= target;
    }
    if (!served) ++outages;
  }
  return outages;
}

}  // namespace

double group_min_rate(const SystemConfig& cfg, Scheme scheme, std::uint64_t trial,
                      std::uint32_t group) {
  GroupEvaluator eval(cfg, scheme);
  return eval.min_rate(trial, group);
}

SopEstimate estimate_sop(const SystemConfig& cfg, Scheme scheme, const EngineOptions& opts) {
  validate(cfg);
  unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));

  if (workers <= 1) {
    return SopEstimate::from_counts(count_outages(cfg, scheme, 0, cfg.trials), cfg.trials);
  }

  std::vector<std::uint64_t> counts(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, cfg.trials);
      const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, cfg.trials);
      pool.emplace_back([&, w, begin, end] { counts[w] = count_outages(cfg, scheme, begin, end); });
    }
  }
  std::uint64_t outages = 0;
  for (std::uint64_t c : counts) outages += c;
  return SopEstimate::from_counts(outages, cfg.trials);
}

Curve sweep(const SystemConfig& cfg, Scheme scheme, std::span<const double> snr_db_list,
            const EngineOptions& opts) {
  if (snr_db_list.empty()) throw std::invalid_argument("sweep: SNR list is empty");
  std::vector<double> snrs(snr_db_list.begin(), snr_db_list.end());
  std::sort(snrs.begin(), snrs.end());
  snrs.erase(std::unique(snrs.begin(), snrs.end()), snrs.end());

  Curve curve;
  curve.scheme = scheme;
  curve.config = cfg;
  curve.points.reserve(snrs.size());
  for (double snr : snrs) {
    const SystemConfig point_cfg = with_legit_snr_db(cfg, snr);
    CurvePoint pt;
    pt.snr_db = snr;
    pt.sop_sim = estimate_sop(point_cfg, scheme, opts);
    if (scheme == Scheme::RisNoma) {
      const auto dc = derive_constants(point_cfg);
      pt.sop_analytic = sop_system(dc, point_cfg.n_groups);
      pt.sop_asymptotic = sop_asymptotic(dc, point_cfg.n_groups);
    }
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace risnoma
