#include "vdf/oracle.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "vdf/errors.hpp"
#include "vdf/greens.hpp"
#include "vdf/quadrature.hpp"
#include "vdf/vdw.hpp"

namespace vdf {
namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

double default_K(cplx a, const LineOptions &opt) {
  if (opt.K > 0.0) return opt.K;
  return std::abs(a.real()) + std::max(3.0, 10.0 / opt.decay);
}

// i * integral_0^Y phi(k0 + s i y) dy for s = +1 or -1, the vertical leg of a tail contour.
cplx vertical(const ComplexFn &phi, double k0, double s, const LineOptions &opt) {
  const double Y = 60.0 / opt.decay;
  auto f = [&](double y) { return phi(cplx(k0, s * y)); };
  return integrate<cplx>(f, 0.0, Y, 1e-300, opt.rel_tol, 30).value;
}

// integral_{-K}^{K} (h(k) - h(a))/(k - a) dk + h(a) [log(K - a) - log(-K - a)]
cplx subtracted_segment(const ComplexFn &h, cplx a, double K, double rel_tol) {
  const cplx ha = h(a);
  auto f = [&](double k) { return (h(cplx(k)) - ha) / (cplx(k) - a); };
  cplx sum = ha * (std::log(cplx(K) - a) - std::log(cplx(-K) - a));
  std::vector<double> cuts{-K, 0.0, K};
  if (std::abs(a.real()) < K && a.real() != 0.0) {
    cuts.insert(a.real() > 0.0 ? cuts.begin() + 2 : cuts.begin() + 1, a.real());
  }
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) sum += integrate<cplx>(f, cuts[i], cuts[i + 1], 1e-300, rel_tol, 30).value;
  return sum;
}

cplx conj_fn(const ComplexFn &f, cplx k) { return std::conj(f(std::conj(k))); }

double neville_at_zero(const std::vector<double> &x, const std::vector<double> &y) {
  std::vector<double> p(y);
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i) p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
  return p[0];
}

Vec3d unit_axis(int j) {
  Vec3d e;
  e[j] = 1.0;
  return e;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Residue: return "residue";
    case Method::Quadrature: return "quadrature";
    case Method::FiniteDifference: return "finite_difference";
    case Method::MonteCarlo: return "monte_carlo";
    case Method::PlateQuadrature: return "plate_quadrature";
  }
  return "unknown";
}

OracleReport compare(cplx closed, cplx numeric, double tol, Method method, double floor) {
  OracleReport r;
  r.closed_value = closed;
  r.numeric_value = numeric;
  r.abs_error_estimate = std::abs(numeric - closed);
  r.rel_deviation = r.abs_error_estimate / std::max(std::abs(closed), floor);
  r.tolerance = tol;
  r.passed = r.rel_deviation <= tol;
  r.method = method;
  return r;
}

OracleReport compare(const Vec3d &closed, const Vec3d &numeric, double tol, Method method, double floor) {
  int j = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(closed[i]) > std::abs(closed[j])) j = i;
  OracleReport r;
  r.closed_value = closed[j];
  r.numeric_value = numeric[j];
  r.abs_error_estimate = max_abs(numeric - closed);
  r.rel_deviation = r.abs_error_estimate / std::max(max_abs(closed), floor);
  r.tolerance = tol;
  r.passed = r.rel_deviation <= tol;
  r.method = method;
  return r;
}

std::string to_json(const OracleReport &r) {
  nlohmann::json j;
  j["schema"] = "vdf.oracle/1";
  j["label"] = r.label;
  j["method"] = to_string(r.method);
  j["closed_value"] = {r.closed_value.real(), r.closed_value.imag()};
  j["numeric_value"] = {r.numeric_value.real(), r.numeric_value.imag()};
  j["abs_error_estimate"] = r.abs_error_estimate;
  j["rel_deviation"] = r.rel_deviation;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  return j.dump();
}

cplx pole_line_integral(const ComplexFn &g, cplx a, const LineOptions &opt) {
  if (!(a.imag() > 0.0)) throw DomainError("pole must lie in the upper half-plane");
  const double K = default_K(a, opt);
  auto phi = [&](cplx k) { return g(k) / (k - a); };
  const cplx seg = subtracted_segment(g, a, K, opt.rel_tol);
  return seg + I * vertical(phi, K, 1.0, opt) - I * vertical(phi, -K, 1.0, opt);
}

FreqIntegral freq_integral(const ComplexFn &f, double kA, double eta, const LineOptions &opt) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  const cplx a(kA, eta);
  const double K = default_K(a, opt);
  auto h = [&](cplx k) { return k * k * (f(k) - conj_fn(f, k)) / (2.0 * I); };
  auto phi = [&](cplx k) { return k * k * f(k) / (k - a); };
  auto psi = [&](cplx k) { return k * k * conj_fn(f, k) / (k - a); };
  const cplx seg = subtracted_segment(h, a, K, opt.rel_tol);
  const cplx up = I * vertical(phi, K, 1.0, opt) - I * vertical(phi, -K, 1.0, opt);
  const cplx down = -I * vertical(psi, K, -1.0, opt) + I * vertical(psi, -K, -1.0, opt);
  FreqIntegral out;
  out.quadrature = seg + (up - down) / (2.0 * I);
  out.residue = pi * kA * kA * f(cplx(kA));
  return out;
}

FreqExtrapolation freq_extrapolate(const ComplexFn &f, double kA, double eta, const LineOptions &opt) {
  const FreqIntegral a = freq_integral(f, kA, eta, opt);
  const FreqIntegral b = freq_integral(f, kA, 0.5 * eta, opt);
  FreqExtrapolation e;
  e.residue = a.residue;
  e.at_eta = a.quadrature;
  e.at_half_eta = b.quadrature;
  e.extrapolated = 2.0 * b.quadrature - a.quadrature;
  e.halving_ratio = std::abs(a.quadrature - a.residue) / std::abs(b.quadrature - a.residue);
  return e;
}

cplx profile_alpha(cplx k, double x) { return std::exp(I * k * x) / (4.0 * pi * x); }

cplx profile_beta(cplx k, double x) {
  const cplx q = k * x;
  return k * std::exp(I * q) / (4.0 * pi) * (I / (q * q) - 1.0 / (q * q * q));
}

cplx profile_magnetic(cplx k, double x) {
  return std::exp(I * k * x) / (4.0 * pi * x) * (1.0 + I / (k * x));
}

ProductOracle rc_product_oracle(double x, double eta, double tol) {
  LineOptions opt;
  opt.decay = x;
  auto fm = [x](cplx k) { return profile_magnetic(k, x); };
  auto fg = [x](cplx k) { return profile_alpha(k, x) + profile_beta(k, x); };
  const FreqIntegral m1 = freq_integral(fm, 1.0, eta, opt), m2 = freq_integral(fm, 1.0, 0.5 * eta, opt);
  const FreqIntegral g1 = freq_integral(fg, 1.0, eta, opt), g2 = freq_integral(fg, 1.0, 0.5 * eta, opt);
  const double closed = 2.0 * pi * pi * (fm(1.0) * fg(1.0)).real();
  ProductOracle out;
  out.at_eta = 2.0 * (m1.quadrature * g1.quadrature).real();
  out.at_half_eta = 2.0 * (m2.quadrature * g2.quadrature).real();
  out.halving_ratio = std::abs(out.at_eta - closed) / std::abs(out.at_half_eta - closed);
  out.report = compare(closed, 2.0 * out.at_half_eta - out.at_eta, tol, Method::Residue);
  out.report.label = "rc_product";
  return out;
}

OracleReport w_zero_oracle(double x, double rho, const Orientation &o, const Vec3d &r_hat, double U, double eta,
                           double tol) {
  LineOptions opt;
  opt.decay = x;
  auto fa = [x](cplx k) { return profile_alpha(k, x); };
  auto fb = [x](cplx k) { return profile_beta(k, x); };
  const auto [alpha, beta] = projectors(r_hat);
  auto energy = [&](double e) {
    const Dyadic3C J = alpha * freq_integral(fa, 1.0, e, opt).quadrature + beta * freq_integral(fb, 1.0, e, opt).quadrature;
    return 32.0 * U * contract(J, J, o).real();
  };
  const double numeric = 2.0 * energy(0.5 * eta) - energy(eta);
  const double closed = w_static(x, r_hat, o, StaticParams{1.0, rho, 1.0 - rho, U},
                                 std::numeric_limits<double>::infinity(), Mode::TimeAveraged);
  OracleReport r = compare(closed, numeric, tol, Method::Quadrature);
  r.label = "w_zero";
  return r;
}

Vec3d finite_difference_gradient(const std::function<double(const Vec3d &)> &energy, const Vec3d &point, double h) {
  if (!(h > 0.0)) throw DomainError("finite difference step must be positive");
  auto central = [&](int j, double step) {
    const double ep = energy(point + unit_axis(j) * step);
    const double em = energy(point - unit_axis(j) * step);
    if (!std::isfinite(ep) || !std::isfinite(em)) throw DomainError("non-finite energy sample");
    return (ep - em) / (2.0 * step);
  };
  Vec3d g;
  for (int j = 0; j < 3; ++j) g[j] = (4.0 * central(j, 0.5 * h) - central(j, h)) / 3.0;
  return g;
}

OracleReport linearity_check(const std::function<double(double)> &quantity, const std::vector<double> &betas,
                             double tol) {
  if (betas.size() < 2) throw DomainError("linearity_check needs at least two velocities");
  std::vector<double> r;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0) || (i > 0 && !(betas[i] < betas[i - 1])))
      throw DomainError("betas must be positive and decreasing");
    const double q = quantity(betas[i]);
    if (!std::isfinite(q)) throw DomainError("non-finite sample in linearity_check");
    r.push_back(q / betas[i]);
  }
  const double all = neville_at_zero(betas, r);
  const std::vector<double> b2(betas.begin() + 1, betas.end()), r2(r.begin() + 1, r.end());
  const double fewer = neville_at_zero(b2, r2);
  OracleReport rep;
  rep.label = "linearity";
  rep.method = Method::FiniteDifference;
  rep.closed_value = all;
  rep.numeric_value = r.back();
  rep.abs_error_estimate = std::abs(all - fewer);
  rep.rel_deviation = rep.abs_error_estimate / std::max(std::abs(all), kCompareFloor);
  rep.tolerance = tol;
  rep.passed = rep.rel_deviation <= tol;
  return rep;
}

}  // namespace vdf
