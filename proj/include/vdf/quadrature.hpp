#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "vdf/linalg.hpp"

namespace vdf {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx &v) { return std::abs(v); }
inline double magnitude(const Vec3d &v) { return max_abs(v); }

template <class V> struct QuadResult {
  V value{};
  double error = 0.0;
  bool converged = true;
};

namespace detail {

// One 15/31-point Gauss-Kronrod panel using Boost's node tables.
template <class V, class F> QuadResult<V> gk31_panel(F &f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  using G = boost::math::quadrature::gauss<double, 15>;
  const auto &xk = GK::abscissa();
  const auto &wk = GK::weights();
  const auto &wg = G::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const V f0 = f(mid);
  V kr = f0 * wk[0];
  V gs = f0 * wg[0];
  for (unsigned i = 1; i < xk.size(); ++i) {
    const V s = f(mid + half * xk[i]) + f(mid - half * xk[i]);
    kr += s * wk[i];
    if (i % 2 == 0) gs += s * wg[i / 2];
  }
  QuadResult<V> r;
  r.value = kr * half;
  r.error = magnitude(kr - gs) * std::abs(half);
  return r;
}

template <class V, class F>
QuadResult<V> adaptive(F &f, double a, double b, double abs_tol, double rel_tol, int depth) {
  QuadResult<V> whole = gk31_panel<V>(f, a, b);
  if (whole.error <= std::max(abs_tol, rel_tol * magnitude(whole.value)) || !std::isfinite(whole.error))
    return whole;
  if (depth == 0) {
    whole.converged = false;
    return whole;
  }
  const double m = 0.5 * (a + b);
  QuadResult<V> left = adaptive<V>(f, a, m, 0.5 * abs_tol, rel_tol, depth - 1);
  QuadResult<V> right = adaptive<V>(f, m, b, 0.5 * abs_tol, rel_tol, depth - 1);
  left.value += right.value;
  left.error += right.error;
  left.converged = left.converged && right.converged;
  return left;
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a, b] for any value type with +, scalar * and magnitude().
template <class V, class F>
QuadResult<V> integrate(F &&f, double a, double b, double abs_tol, double rel_tol = 1e-10, int max_depth = 24) {
  return detail::adaptive<V>(f, a, b, abs_tol, rel_tol, max_depth);
}

// Wynn epsilon acceleration of a sequence of partial sums.
struct EpsilonEstimate {
  double value = 0.0;
  double error = 0.0;
};
EpsilonEstimate wynn_epsilon(const std::vector<double> &partial_sums);

struct ExtrapolatedSum {
  Vec3d value;
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

// Sum panel(0) + panel(1) + ... with componentwise Wynn acceleration. Stops when two
// successive extrapolations agree within max(abs_tol, rel_tol*|value|).
ExtrapolatedSum partition_extrapolate(const std::function<Vec3d(int)> &panel, double rel_tol, double abs_tol,
                                      int min_panels, int max_panels);

}  // namespace vdf
