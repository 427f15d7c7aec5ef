#pragma once

#include <cstdint>

#include "vdf/linalg.hpp"

namespace vdf {

// Signed coupling scalar. In reduced units the magnitude is usually 1 and the
// sign follows the detuning.
struct CouplingU {
  double value = 1.0;
  int sign() const { return value > 0.0 ? 1 : (value < 0.0 ? -1 : 0); }
};

struct Orientation {
  bool isotropic = true;
  Vec3d muA{0.0, 0.0, 1.0};
  Vec3d muB{0.0, 0.0, 1.0};

  static Orientation iso() { return {}; }
  // Throws NormalizationError for non-unit inputs.
  static Orientation fixed(const Vec3d &muA_hat, const Vec3d &muB_hat);
};

cplx isotropic_contract(const Dyadic3C &X, const Dyadic3C &Y);
cplx fixed_orientation_contract(const Dyadic3C &X, const Dyadic3C &Y, const Vec3d &muA_hat,
                                const Vec3d &muB_hat);

struct MonteCarloEstimate {
  cplx mean;
  double std_error = 0.0;  // standard error of the real part
  double std_error_imag = 0.0;
};

// Independent uniform orientations for A and B.
MonteCarloEstimate monte_carlo_contract(const Dyadic3C &X, const Dyadic3C &Y, std::size_t samples,
                                        std::uint64_t seed);

// X^{ij} Y^{pq} muA_i muB_j muB_p muA_q, or its isotropic average Tr(XY)/9.
template <class T> T contract(const Mat3<T> &X, const Mat3<T> &Y, const Orientation &o) {
  if (o.isotropic) return trace(X * Y) * (1.0 / 9.0);
  T xab{}, yba{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      xab += X(i, j) * (o.muA[i] * o.muB[j]);
      yba += Y(i, j) * (o.muB[i] * o.muA[j]);
    }
  return xab * yba;
}

}  // namespace vdf
