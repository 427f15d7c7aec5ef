#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vdf/dipole_avg.hpp"
#include "vdf/linalg.hpp"

namespace vdf {

enum class Method { Residue, Quadrature, FiniteDifference, MonteCarlo, PlateQuadrature };
std::string to_string(Method m);

struct OracleReport {
  std::string label;
  cplx closed_value;
  cplx numeric_value;
  double abs_error_estimate = 0.0;
  double rel_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Method method = Method::Quadrature;
};

inline constexpr double kCompareFloor = 1e-10;

// rel_deviation = |numeric - closed| / max(|closed|, floor).
OracleReport compare(cplx closed, cplx numeric, double tol, Method method, double floor = kCompareFloor);
// Vector form: deviation max|numeric - closed| / max(max|closed|, floor); the reported
// values are the components of largest closed magnitude.
OracleReport compare(const Vec3d &closed, const Vec3d &numeric, double tol, Method method,
                     double floor = kCompareFloor);
std::string to_json(const OracleReport &r);

using ComplexFn = std::function<cplx(cplx)>;

struct LineOptions {
  double K = 0.0;       // real segment [-K, K]; 0 selects a default from the pole position
  double decay = 1.0;   // decay rate of the kernel away from the real axis (e.g. R for e^{ikR})
  double rel_tol = 1e-12;
};

// Integral over the real line of g(k)/(k - a), Im a > 0, for g analytic and decaying in the
// upper half-plane. Real segment with pole subtraction plus vertical tail contours.
cplx pole_line_integral(const ComplexFn &g, cplx a, const LineOptions &opt = {});

struct FreqIntegral {
  cplx residue;     // pi k_A^2 f(k_A), the eta -> 0 closed value
  cplx quadrature;  // numeric value at finite eta
};

// J(eta) = integral dk k^2 Im f(k) / (k - k_A - i eta), where f is analytic in k and
// decays in the upper half-plane; Im f is continued as (f(k) - conj f(conj k))/2i.
FreqIntegral freq_integral(const ComplexFn &f, double kA, double eta, const LineOptions &opt = {});

// Residue value and two-point eta extrapolation 2 J(eta/2) - J(eta).
struct FreqExtrapolation {
  cplx residue;
  cplx at_eta;
  cplx at_half_eta;
  cplx extrapolated;
  // |J(eta) - residue| / |J(eta/2) - residue|, about 2 for first-order eta dependence
  double halving_ratio = 0.0;
};
FreqExtrapolation freq_extrapolate(const ComplexFn &f, double kA, double eta, const LineOptions &opt = {});

// Radial profiles of the Green's dyadics at separation x (k_A = 1):
// G = g_alpha(k) alpha + g_beta(k) beta, Gm = g_m(k) E(r_hat).
cplx profile_alpha(cplx k, double x);
cplx profile_beta(cplx k, double x);
cplx profile_magnetic(cplx k, double x);

// The Gm.G product behind the conservative Roentgen force: compares
// 2 Re{J_m J_G} (J_G for g_alpha + g_beta) against 2 pi^2 Re{g_m (g_alpha + g_beta)} at k_A.
struct ProductOracle {
  OracleReport report;
  double at_eta = 0.0;
  double at_half_eta = 0.0;
  double halving_ratio = 0.0;
};
ProductOracle rc_product_oracle(double x, double eta, double tol = 1e-3);

// Zero-velocity energy from 32 U Re{contract(J_G, J_G)} with eta extrapolation.
OracleReport w_zero_oracle(double x, double rho, const Orientation &o, const Vec3d &r_hat, double U, double eta,
                           double tol);

// Central differences per component, Richardson-combined from steps h and h/2.
Vec3d finite_difference_gradient(const std::function<double(const Vec3d &)> &energy, const Vec3d &point, double h);

// Fits q(beta)/beta over decreasing betas and extrapolates to beta = 0 (Neville).
// rel_deviation is the extrapolation error estimate relative to the extrapolated value.
OracleReport linearity_check(const std::function<double(double)> &quantity, const std::vector<double> &betas,
                             double tol = 1e-4);

}  // namespace vdf
