#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.
//
// The interval with the largest error estimate is bisected until the summed
// estimate meets the requested tolerance. Failure to converge within the
// interval budget raises QuadratureError carrying the partial result.

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace risnoma {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  int evaluations = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}

  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd indices are shared with the Gauss rule.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gauss_kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Integral of f over the finite interval [a, b].
template <typename F>
QuadratureResult integrate(F f, double a, double b, const QuadratureOptions& opts = {}) {
  QuadratureResult result;
  if (a == b) return result;

  std::vector<detail::Segment> heap{detail::gauss_kronrod15(f, a, b)};
  result.value = heap.front().value;
  result.abs_error = heap.front().error;
  result.intervals = 1;
  result.evaluations = 15;

  auto converged = [&] {
    return result.abs_error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(result.value));
  };

  while (!converged()) {
    if (result.intervals >= opts.max_intervals) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << result.value
          << ", error " << result.abs_error << " after " << result.intervals << " intervals ("
          << result.evaluations << " evaluations)";
      throw QuadratureError(msg.str(), result);
    }
    std::pop_heap(heap.begin(), heap.end());
    const detail::Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    for (const auto& half :
         {detail::gauss_kronrod15(f, worst.a, mid), detail::gauss_kronrod15(f, mid, worst.b)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end());
    }
    result.evaluations += 30;
    ++result.intervals;

    // Summed from scratch so cancellation in the running total cannot build up.
    result.value = 0.0;
    result.abs_error = 0.0;
    for (const auto& s : heap) {
      result.value += s.value;
      result.abs_error += s.error;
    }
  }
  return result;
}

/// Integral of f over [a, inf) via x = a + t / (1 - t).
template <typename F>
QuadratureResult integrate_to_infinity(F f, double a, const QuadratureOptions& opts = {}) {
  auto mapped = [&f, a](double t) {
    if (t >= 1.0) return 0.0;
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    const double value = f(x) / (one_minus * one_minus);
    return std::isfinite(value) ? value : 0.0;
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace risnoma
