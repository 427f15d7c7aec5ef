#include "vdf/dipole_avg.hpp"

#include <cmath>
#include <random>

#include "vdf/errors.hpp"

namespace vdf {
namespace {

void require_unit(const Vec3d &u, const char *what) {
  if (std::abs(norm(u) - 1.0) > 1e-12) throw NormalizationError(std::string(what) + " is not a unit vector");
}

Vec3d random_direction(std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Vec3d v{n(rng), n(rng), n(rng)};
    const double r = norm(v);
    if (r > 1e-12) return v / r;
  }
}

}  // namespace

Orientation Orientation::fixed(const Vec3d &muA_hat, const Vec3d &muB_hat) {
  require_unit(muA_hat, "muA_hat");
  require_unit(muB_hat, "muB_hat");
  return {false, muA_hat, muB_hat};
}

cplx isotropic_contract(const Dyadic3C &X, const Dyadic3C &Y) {
  return contract(X, Y, Orientation::iso());
}

cplx fixed_orientation_contract(const Dyadic3C &X, const Dyadic3C &Y, const Vec3d &muA_hat,
                                const Vec3d &muB_hat) {
  return contract(X, Y, Orientation::fixed(muA_hat, muB_hat));
}

MonteCarloEstimate monte_carlo_contract(const Dyadic3C &X, const Dyadic3C &Y, std::size_t samples,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double sr = 0, si = 0, sr2 = 0, si2 = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    Orientation o{false, random_direction(rng), random_direction(rng)};
    const cplx c = contract(X, Y, o);
    sr += c.real();
    si += c.imag();
    sr2 += c.real() * c.real();
    si2 += c.imag() * c.imag();
  }
  const double N = static_cast<double>(samples);
  MonteCarloEstimate e;
  e.mean = {sr / N, si / N};
  e.std_error = std::sqrt(std::max(0.0, sr2 / N - (sr / N) * (sr / N)) / N);
  e.std_error_imag = std::sqrt(std::max(0.0, si2 / N - (si / N) * (si / N)) / N);
  return e;
}

}  // namespace vdf
