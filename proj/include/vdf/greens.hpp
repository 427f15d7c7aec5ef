#pragma once

#include <numbers>
#include <utility>

#include "vdf/linalg.hpp"

namespace vdf {

struct LagCorrections {
  Dyadic3C dG_lag_R;
  Dyadic3C dGm_lag_R;
  Dyadic3C dG_lag_perp;
  Dyadic3C dGm_lag_perp;
  double lag_time = 0.0;
};

// alpha = I - r r, beta = I - 3 r r. Throws NormalizationError unless |r_hat| = 1 to 1e-12.
std::pair<Dyadic3C, Dyadic3C> projectors(const Vec3d &r_hat);

Dyadic3C green_electric(double k, const Vec3d &R);
Dyadic3C green_magnetic(double k, const Vec3d &R);
Dyadic3C green_shifted_exact(double k, const Vec3d &R, const Vec3d &v, double tau);
Dyadic3C green_shifted_linear(double k, const Vec3d &R, const Vec3d &v, double tau);
LagCorrections lag_corrections(double k, const Vec3d &R, const Vec3d &v, double tau);

// Templated kernels. C is cplx or Jet<cplx>; the latter carries a derivative
// with respect to k or along a direction in R.
namespace kern {

inline constexpr double inv4pi = 0.25 / std::numbers::pi;
inline const cplx I_unit{0.0, 1.0};

template <class C> C length(const Vec3<C> &R) {
  using std::sqrt;
  return sqrt(dot(R, R));
}

template <class C> Vec3<C> unit(const Vec3<C> &R) { return R / length(R); }

template <class C> Mat3<C> alpha(const Vec3<C> &r) { return Mat3<C>::identity() - outer(r, r); }
template <class C> Mat3<C> beta(const Vec3<C> &r) {
  return Mat3<C>::identity() - outer(r, r) * 3.0;
}

// G = (k e^{ikR}/4pi)[alpha/kR + i beta/(kR)^2 - beta/(kR)^3]
template <class C> Mat3<C> green_electric(const C &k, const Vec3<C> &R) {
  using std::exp;
  const C r = length(R);
  const Vec3<C> u = R / r;
  const C q = k * r;
  const C pre = k * exp(I_unit * q) * inv4pi;
  const C a = pre / q;
  const C b = pre * (I_unit / (q * q) - 1.0 / (q * q * q));
  return alpha(u) * a + beta(u) * b;
}

// Magnetic dyadic with c = 1: e^{ikR}/(4 pi R) (1 + i/kR) E(R_hat).
template <class C> Mat3<C> green_magnetic(const C &k, const Vec3<C> &R) {
  using std::exp;
  const C r = length(R);
  const Vec3<C> u = R / r;
  const C q = k * r;
  const C s = exp(I_unit * q) * inv4pi / r * (1.0 + I_unit / q);
  return levi_civita_dual(u) * s;
}

// Lag corrections divided by the lag time.
template <class C> struct LagDensity {
  Mat3<C> G_R, Gm_R, G_perp, Gm_perp;
};

template <class C> LagDensity<C> lag_density(const C &k, const Vec3<C> &R, const Vec3<C> &v) {
  using std::exp;
  const C r = length(R);
  const Vec3<C> u = R / r;
  const C q = k * r;
  const C vR = dot(v, u);
  const Vec3<C> vp = v - u * vR;
  const C pre = k * exp(I_unit * q) * inv4pi / r;
  const C q2 = q * q;
  const C q3 = q2 * q;
  LagDensity<C> d;
  d.G_R = (alpha(u) * (1.0 / q) + beta(u) * (2.0 * I_unit / q2 - 3.0 / q3)) * (vR * pre);
  d.Gm_R = levi_civita_dual(u) * (vR * pre * (1.0 / q + 2.0 * I_unit / q2));
  d.G_perp = (outer(u, vp) + outer(vp, u)) * (pre * (1.0 / q + 3.0 * I_unit / q2 - 3.0 / q3));
  d.Gm_perp = levi_civita_dual(vp) * (-pre * (1.0 / q + I_unit / q2));
  return d;
}

}  // namespace kern
}  // namespace vdf
