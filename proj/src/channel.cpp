#include "risnoma/channel.hpp"

#include <stdexcept>

namespace risnoma {

void draw_trial(const SystemConfig& cfg, const LinkBudget& budget, Substream& rng, TrialDraw& out) {
  const Eigen::Index n = cfg.n_elements;
  out.alpha.resize(n);
  out.beta_user.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.alpha[i] = sample_rayleigh_amplitude(rng);
  for (Eigen::Index i = 0; i < n; ++i) out.beta_user[i] = sample_rayleigh_amplitude(rng);
  out.a_sum = (out.alpha * out.beta_user).sum();
  out.h2_sq = sample_unit_exponential(rng);

  if (cfg.eve_model == EveModel::Exponential) {
    out.residual_phases.resize(0);
    out.eve_composite_sq = budget.lambda_e(cfg.n_elements) * sample_unit_exponential(rng);
    return;
  }

  // The RIS sets phi_i = theta_i + eps_i for the far user, so the reflected
  // path at E carries phase eps_i - delta_i: uniform and not co-phased.
  out.residual_phases.resize(n);
  std::complex<double> reflected{0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double beta_eve = sample_rayleigh_amplitude(rng);
    const double eps = sample_phase(rng);
    const double delta = sample_phase(rng);
    double residual = eps - delta;
    if (residual < 0.0) residual += 2.0 * M_PI;
    out.residual_phases[i] = residual;
    reflected += std::polar(out.alpha[i] * beta_eve, residual);
  }
  const std::complex<double> direct = sample_complex_gaussian(rng);
  out.eve_composite_sq =
      std::norm(direct * std::sqrt(budget.eve_direct) + reflected * std::sqrt(budget.eve_ris));
}

TrialDraw draw_trial(const SystemConfig& cfg, Substream& rng) {
  TrialDraw out;
  draw_trial(cfg, link_budget(cfg), rng, out);
  return out;
}

GroupRates secrecy_rates(const TrialDraw& trial, const PowerSplit& split, const LinkBudget& budget) {
  const double far = gamma_far(trial.a_sum, split, budget.ris);
  const double near = gamma_near(trial.h2_sq, split, budget.near);
  return {secrecy_rate(far, gamma_eve(trial.eve_composite_sq, split.far)),
          secrecy_rate(near, gamma_eve(trial.eve_composite_sq, split.near))};
}

GroupRates secrecy_rates(const TrialDraw& trial, const SystemConfig& cfg) {
  return secrecy_rates(trial, PowerSplit::from_far_share(cfg.c1_sq), link_budget(cfg));
}

std::size_t select_group(std::span<const GroupRates> rates) {
  if (rates.empty()) throw std::invalid_argument("select_group: no groups to choose from");
  std::size_t best = 0;
  for (std::size_t m = 1; m < rates.size(); ++m) {
    if (rates[m].min_rate() > rates[best].min_rate()) best = m;
  }
  return best;
}

}  // namespace risnoma
