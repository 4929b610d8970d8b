#pragma once

// Closed-form secrecy outage machinery: the CLT density of A^2, the
// exponential law of B^2, the per-group and system SOP bound, its high-SNR
// asymptote, and a quadrature oracle for the P_r1 double integral.
//
// Everything is templated on the scalar so the same expressions can be
// evaluated in long double when cross-checking double results.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "risnoma/config.hpp"
#include "risnoma/quadrature.hpp"

namespace risnoma {

template <typename Scalar = double>
struct DerivedConstants {
  Scalar c_th{};       // 2^R
  Scalar eta{};        // (1 - c2 C_th) / (C_th c1 c2), upper limit on B^2
  Scalar mu{};         // C_th / snr_near
  Scalar nu{};         // (C_th - 1) / (c2 snr_near)
  Scalar lambda_e{};   // N snr_eve_ris + snr_eve_direct
  Scalar lambda_nc{};  // (N pi / 4)^2, non-centrality of A^2
  Scalar sigma_sq{};   // N (1 - pi^2 / 16)
  bool feasible = false;  // c2 C_th < 1
};

/// CLT parameters of A = sum of N products of unit-power Rayleigh amplitudes.
template <typename Scalar = double>
Scalar clt_mean(int n_elements) {
  return n_elements * std::numbers::pi_v<Scalar> / Scalar(4);
}

template <typename Scalar = double>
Scalar clt_variance(int n_elements) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  return n_elements * (Scalar(1) - pi * pi / Scalar(16));
}

/// `snr_near` may be +inf (mu = nu = 0).
template <typename Scalar = double>
DerivedConstants<Scalar> derive_constants(int n_elements, Scalar c1_sq, Scalar target_rate,
                                          Scalar snr_near, Scalar snr_eve_ris,
                                          Scalar snr_eve_direct) {
  using std::pow;
  DerivedConstants<Scalar> dc;
  const Scalar c2_sq = Scalar(1) - c1_sq;
  dc.c_th = pow(Scalar(2), target_rate);
  dc.eta = (Scalar(1) - c2_sq * dc.c_th) / (dc.c_th * c1_sq * c2_sq);
  dc.mu = dc.c_th / snr_near;
  dc.nu = (dc.c_th - Scalar(1)) / (c2_sq * snr_near);
  dc.lambda_e = n_elements * snr_eve_ris + snr_eve_direct;
  const Scalar mean = clt_mean<Scalar>(n_elements);
  dc.lambda_nc = mean * mean;
  dc.sigma_sq = clt_variance<Scalar>(n_elements);
  dc.feasible = c2_sq * dc.c_th < Scalar(1);
  return dc;
}

template <typename Scalar = double>
DerivedConstants<Scalar> derive_constants(const SystemConfig& cfg) {
  const LinkBudget lb = link_budget(cfg);
  return derive_constants<Scalar>(cfg.n_elements, Scalar(cfg.c1_sq), Scalar(cfg.target_rate),
                                  Scalar(lb.near), Scalar(lb.eve_ris), Scalar(lb.eve_direct));
}

// ---------------------------------------------------------------------------
// Densities

/// Density of A^2 under the CLT approximation: non-central chi-square with
/// one degree of freedom written with I_{-1/2}(z) = sqrt(2 / (pi z)) cosh z.
/// Evaluated in the log domain; the argument z reaches ~N^2 for large y.
/// Returns +inf at y = 0 (integrable y^{-1/2} singularity).
template <std::floating_point Scalar>
Scalar pdf_a_squared(Scalar y, int n_elements) {
  using std::exp;
  using std::log;
  using std::log1p;
  using std::sqrt;
  if (!(y >= Scalar(0))) throw std::domain_error("pdf_a_squared: y must be non-negative");
  if (y == Scalar(0)) return std::numeric_limits<Scalar>::infinity();
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar m = clt_mean<Scalar>(n_elements);
  const Scalar lambda = m * m;
  const Scalar s2 = clt_variance<Scalar>(n_elements);

  const Scalar z = sqrt(y * lambda) / s2;
  const Scalar log_cosh = z + log1p(exp(Scalar(-2) * z)) - std::numbers::ln2_v<Scalar>;
  const Scalar log_bessel = Scalar(0.5) * log(Scalar(2) / (pi * z)) + log_cosh;
  const Scalar log_pdf = -log(Scalar(2) * s2) - Scalar(0.25) * log(y / lambda) -
                         (y + lambda) / (Scalar(2) * s2) + log_bessel;
  return exp(log_pdf);
}

template <typename Derived>
auto pdf_a_squared(const Eigen::ArrayBase<Derived>& y, int n_elements) {
  using Scalar = typename Derived::Scalar;
  return y.unaryExpr([n_elements](Scalar v) { return pdf_a_squared(v, n_elements); });
}

/// CDF of A^2 with A ~ Normal(N pi / 4, N (1 - pi^2 / 16)).
template <std::floating_point Scalar>
Scalar cdf_a_squared(Scalar y, int n_elements) {
  using std::erfc;
  using std::sqrt;
  if (y <= Scalar(0)) return Scalar(0);
  const Scalar m = clt_mean<Scalar>(n_elements);
  const Scalar s = sqrt(clt_variance<Scalar>(n_elements));
  const Scalar r = sqrt(y);
  const Scalar inv_sqrt2 = Scalar(1) / std::numbers::sqrt2_v<Scalar>;
  // Phi(u) - Phi(l) = (erfc(-u/sqrt2) - erfc(-l/sqrt2)) / 2
  const Scalar upper = (r - m) / s;
  const Scalar lower = (-r - m) / s;
  return Scalar(0.5) * (erfc(-upper * inv_sqrt2) - erfc(-lower * inv_sqrt2));
}

/// Exponential density of B^2 with mean lambda_e.
template <std::floating_point Scalar>
Scalar pdf_b_squared(Scalar y, Scalar lambda_e) {
  using std::exp;
  if (!(y >= Scalar(0))) throw std::domain_error("pdf_b_squared: y must be non-negative");
  return exp(-y / lambda_e) / lambda_e;
}

template <typename Derived>
auto pdf_b_squared(const Eigen::ArrayBase<Derived>& y, double lambda_e) {
  using Scalar = typename Derived::Scalar;
  return y.unaryExpr([lambda_e](Scalar v) { return pdf_b_squared(v, Scalar(lambda_e)); });
}

template <std::floating_point Scalar>
Scalar cdf_b_squared(Scalar y, Scalar lambda_e) {
  using std::expm1;
  return y <= Scalar(0) ? Scalar(0) : -expm1(-y / lambda_e);
}

// ---------------------------------------------------------------------------
// Secrecy outage

/// P(B^2 < eta, |h|^2 > mu B^2 + nu) in closed form; 0 when infeasible.
template <typename Scalar>
Scalar pr1_closed_form(const DerivedConstants<Scalar>& dc) {
  using std::exp;
  using std::expm1;
  if (!dc.feasible) return Scalar(0);
  const Scalar rate = dc.mu + Scalar(1) / dc.lambda_e;
  return exp(-dc.nu) / (dc.mu * dc.lambda_e + Scalar(1)) * -expm1(-rate * dc.eta);
}

/// Per-group outage bound; 1 when the power split cannot support the rate.
template <typename Scalar>
Scalar sop_group(const DerivedConstants<Scalar>& dc) {
  if (!dc.feasible) return Scalar(1);
  return std::clamp(Scalar(1) - pr1_closed_form(dc), Scalar(0), Scalar(1));
}

/// System outage with M i.i.d. groups under max-min selection.
template <typename Scalar>
Scalar sop_system(const DerivedConstants<Scalar>& dc, int n_groups) {
  using std::pow;
  return pow(sop_group(dc), n_groups);
}

/// High-SNR limit exp(-M eta / lambda_E); 1 when infeasible.
template <typename Scalar>
Scalar sop_asymptotic(const DerivedConstants<Scalar>& dc, int n_groups) {
  using std::exp;
  if (!dc.feasible) return Scalar(1);
  return exp(-Scalar(n_groups) * dc.eta / dc.lambda_e);
}

/// Quadrature evaluation of
///   P_r1 = int_0^eta [ int_{mu x + nu}^inf e^{-y} dy ] (1/lambda_E) e^{-x/lambda_E} dx
/// with the inner tail taken analytically. Independent of pr1_closed_form.
/// Returns 0 for an empty region (eta <= 0). Throws QuadratureError if the
/// outer integral fails to converge.
template <typename Scalar>
double pr1_oracle(const DerivedConstants<Scalar>& dc, const QuadratureOptions& opts = {}) {
  const double eta = static_cast<double>(dc.eta);
  if (!(eta > 0.0)) return 0.0;
  const double mu = static_cast<double>(dc.mu);
  const double nu = static_cast<double>(dc.nu);
  const double lambda_e = static_cast<double>(dc.lambda_e);
  auto integrand = [=](double x) {
    const double near_success = std::exp(-(mu * x + nu));
    const double eve_density = std::exp(-x / lambda_e) / lambda_e;
    return near_success * eve_density;
  };
  return integrate(integrand, 0.0, eta, opts).value;
}

}  // namespace risnoma
