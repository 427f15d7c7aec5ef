#include "vdf/plate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "vdf/errors.hpp"
#include "vdf/quadrature.hpp"

namespace vdf {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = 0.5 * std::numbers::pi;

PairState pair_state(const PlateConfig &cfg, double x, double y, double d) {
  PairState s = PairState::from_vectors(Vec3d{-x, -y, d}, cfg.velocity(), cfg.rho, cfg.U);
  s.T_red = cfg.T_red;
  s.gammaA_red = cfg.gammaA_red;
  s.gammaB_red = cfg.gammaB_red;
  return s;
}

void check_plate(const PlateConfig &cfg) {
  if (!(cfg.d_red > 0.0) || !std::isfinite(cfg.d_red)) throw DomainError("plate height must be positive");
  if (std::abs(cfg.v_dir[2]) > 1e-12) throw DomainError("plate velocity must be parallel to the plate");
  if (cfg.delta() == 0.0) throw PoleError("plate force: zero detuning");
}

}  // namespace

PairForce plate_pair_vdw(const PlateConfig &cfg, const Orientation &o) {
  return [cfg, o](double x, double y, double d) { return vdw_force(pair_state(cfg, x, y, d), o); };
}

PairForce plate_pair_rnc(const PlateConfig &cfg, const Orientation &o) {
  return [cfg, o](double x, double y, double d) { return roentgen_nonconservative(pair_state(cfg, x, y, d), o); };
}

PairForce plate_pair_rc(const PlateConfig &cfg, const Orientation &o) {
  return [cfg, o](double x, double y, double d) { return roentgen_conservative(pair_state(cfg, x, y, d), o); };
}

Vec3d plate_vdw_closed(const PlateConfig &cfg, Regime regime, std::vector<std::string> *warnings) {
  check_plate(cfg);
  const double d = cfg.d_red;
  const double delta = cfg.delta();
  const double su = cfg.sigma_red * cfg.U.value;
  if (regime == Regime::Near) {
    if (warnings && !(d < kNearThreshold)) warnings->push_back("near-field plate law used at k_A d >= 0.1");
    return cfg.velocity() * (-(8.0 * pi / 21.0) * su * (1.0 + cfg.rho) / (delta * std::pow(d, 5)));
  }
  if (warnings && !(d > kFarThreshold)) warnings->push_back("far-field plate law used at k_A d <= 10");
  const double br = std::sin(2.0 * d) - 2.0 * delta * d * std::cos(2.0 * d);
  return cfg.velocity() * (-(2.0 * pi / 9.0) * su * cfg.rho * br / (delta * d * d));
}

Vec3d plate_roentgen_closed(const PlateConfig &cfg, std::vector<std::string> *warnings) {
  check_plate(cfg);
  const double d = cfg.d_red;
  if (warnings && !(d > kFarThreshold)) warnings->push_back("retarded Roentgen plate law used at k_A d <= 10");
  const double br = std::cos(2.0 * d) + 2.0 * std::sin(2.0 * d) / d;
  return cfg.velocity() * (-(2.0 * pi / 9.0) * cfg.sigma_red * cfg.U.value * br / (d * cfg.delta()));
}

PlateIntegral plate_integrate(const PairForce &pair_force, const PlateConfig &cfg, double tol,
                              const PlateQuadratureOptions &opt) {
  if (!(cfg.d_red > 0.0)) throw DomainError("plate height must be positive");
  const double d = cfg.d_red;
  const int N = opt.azimuth_points;

  // Periodic trapezoid in the azimuth; the integrand is a low-order trigonometric polynomial.
  auto ring_mean = [&](double s) {
    Vec3d acc{};
    for (int j = 0; j < N; ++j) {
      const double phi = 2.0 * pi * (j + 0.5) / N;
      acc += pair_force(s * std::cos(phi), s * std::sin(phi), d);
    }
    return acc * (2.0 * pi / N);
  };

  // Inner disc: geometric panels in s up to the first oscillation boundary.
  const double R1 = half_pi * std::ceil((d + half_pi) / half_pi);
  const double s1 = std::sqrt(R1 * R1 - d * d);
  std::vector<double> cuts{0.0};
  for (double s = d; s < s1; s *= 2.0) cuts.push_back(s);
  cuts.push_back(s1);

  auto radial = [&](double s) { return ring_mean(s) * s; };
  const double inner_tol = std::min(1e-10, 1e-2 * tol);
  Vec3d inner{};
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto r = integrate<Vec3d>(radial, cuts[i], cuts[i + 1], 1e-3 * inner_tol * max_abs(inner), inner_tol, 16);
    inner += r.value;
    err += r.error;
  }

  // Outer region: panels of width pi/2 in R = sqrt(s^2 + d^2), s ds = R dR.
  auto outer = [&](double R) { return ring_mean(std::sqrt(R * R - d * d)) * R; };
  auto panel = [&](int i) {
    const double a = R1 + half_pi * i;
    return integrate<Vec3d>(outer, a, a + half_pi, 1e-3 * inner_tol * max_abs(inner), inner_tol, 12).value;
  };
  const ExtrapolatedSum tail = partition_extrapolate(panel, tol, 0.1 * tol * max_abs(inner), 8, opt.max_panels);

  PlateIntegral out;
  out.value = (inner + tail.value) * cfg.sigma_red;
  out.error = (err + tail.error) * std::abs(cfg.sigma_red);
  out.panels = tail.panels;
  if (!tail.converged) {
    std::ostringstream os;
    os << "plate quadrature did not converge within " << opt.max_panels << " panels (estimate "
       << max_abs(out.value) << ", error " << out.error << ")";
    throw ConvergenceError(os.str(), max_abs(out.value), out.error);
  }
  return out;
}

}  // namespace vdf
