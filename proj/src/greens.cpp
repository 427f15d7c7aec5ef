#include "vdf/greens.hpp"

#include <cmath>
#include <string>

#include "vdf/errors.hpp"

namespace vdf {
namespace {

constexpr double kMinKR = 1e-8;

Vec3c lift(const Vec3d &a) { return {cplx(a[0]), cplx(a[1]), cplx(a[2])}; }

void check_args(double k, const Vec3d &R, const char *who) {
  const double r = norm(R);
  if (r == 0.0) throw SingularityError(std::string(who) + ": zero separation");
  if (k == 0.0) throw DomainError(std::string(who) + ": k must be nonzero");
  if (!std::isfinite(r) || !std::isfinite(k)) throw DomainError(std::string(who) + ": non-finite argument");
  if (std::abs(k) * r < kMinKR) throw DomainError(std::string(who) + ": kR below 1e-8");
}

}  // namespace

std::pair<Dyadic3C, Dyadic3C> projectors(const Vec3d &r_hat) {
  if (std::abs(norm(r_hat) - 1.0) > 1e-12) throw NormalizationError("projectors: r_hat is not a unit vector");
  const Vec3c u = lift(r_hat);
  return {kern::alpha(u), kern::beta(u)};
}

Dyadic3C green_electric(double k, const Vec3d &R) {
  check_args(k, R, "green_electric");
  return kern::green_electric(cplx(k), lift(R));
}

Dyadic3C green_magnetic(double k, const Vec3d &R) {
  check_args(k, R, "green_magnetic");
  return kern::green_magnetic(cplx(k), lift(R));
}

Dyadic3C green_shifted_exact(double k, const Vec3d &R, const Vec3d &v, double tau) {
  const Vec3d Rs = R - v * tau;
  if (norm(Rs) == 0.0) throw SingularityError("green_shifted_exact: displaced separation is zero");
  return green_electric(k, Rs);
}

Dyadic3C green_shifted_linear(double k, const Vec3d &R, const Vec3d &v, double tau) {
  check_args(k, R, "green_shifted_linear");
  const double vR = dot(v, R) / norm(R);
  const cplx doppler = std::exp(cplx(0.0, -k * vR * tau));
  const LagCorrections lag = lag_corrections(k, R, v, tau);
  return green_electric(k, R) * doppler + lag.dG_lag_R + lag.dG_lag_perp;
}

LagCorrections lag_corrections(double k, const Vec3d &R, const Vec3d &v, double tau) {
  check_args(k, R, "lag_corrections");
  const auto d = kern::lag_density(cplx(k), lift(R), lift(v));
  const cplx t(tau);
  return {d.G_R * t, d.Gm_R * t, d.G_perp * t, d.Gm_perp * t, tau};
}

}  // namespace vdf
