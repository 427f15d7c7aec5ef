#include "vdf/vdw.hpp"

#include <cmath>
#include <sstream>

#include "vdf/errors.hpp"
#include "vdf/greens.hpp"
#include "vdf/jet.hpp"

namespace vdf {
namespace {

using JetD = Jet<double>;

template <class R> struct Contractions {
  R bb, ab, aa;
};

template <class R> Contractions<R> contractions(const Vec3<R> &u, const Orientation &o) {
  const Mat3<R> a = kern::alpha(u);
  const Mat3<R> b = kern::beta(u);
  return {contract(b, b, o), contract(a, b, o), contract(a, a, o)};
}

// (2U/x^6)[Qbb - k^2x^2(Qbb+2Qab) + k^4x^4 Qaa] cos(phase) + (4Uk/x^5)[Qbb - k^2x^2 Qab] sin(phase)
template <class R>
R oscillating_pair(const R &x, const Contractions<R> &q, double k, double U, const R &phase) {
  using std::cos;
  using std::sin;
  const R x2 = x * x;
  const R kx2 = x2 * (k * k);
  const R x5 = x2 * x2 * x;
  const R c1 = q.bb - kx2 * (q.bb + 2.0 * q.ab) + kx2 * kx2 * q.aa;
  const R c2 = q.bb - kx2 * q.ab;
  return (2.0 * U) * c1 * cos(phase) / (x5 * x) + (4.0 * U * k) * c2 * sin(phase) / x5;
}

template <class R>
R static_form(const R &x, const Contractions<R> &q, const StaticParams &p, double T, Mode mode) {
  R w = oscillating_pair(x, q, p.k, p.U, x * (2.0 * p.k));
  if (mode == Mode::Instantaneous) {
    if (!std::isfinite(T)) throw DomainError("instantaneous mode needs a finite observation time");
    w = w - oscillating_pair(x, q, p.kB, p.U, x * (2.0 * p.kB) + p.delta * T);
  }
  return w;
}

// P(k0 + dk, U0 + dU, phase0 + dphase) - P(k0, U0, phase0) for the oscillating pair above,
// written without subtracting nearly equal terms so that small velocity shifts keep full precision.
template <class R>
R oscillating_pair_shift(const R &x, const Contractions<R> &q, double k0, double dk, double U0, double dU,
                         const R &phase0, const R &dphase) {
  using std::cos;
  using std::sin;
  const double k1 = k0 + dk;
  const double dk2 = dk * (2.0 * k0 + dk);             // k1^2 - k0^2
  const double dk4 = dk2 * (k1 * k1 + k0 * k0);         // k1^4 - k0^4
  const double dk3 = dk * (k1 * k1 + k1 * k0 + k0 * k0);  // k1^3 - k0^3
  const R x2 = x * x;
  const R x5 = x2 * x2 * x;
  const R A0 = q.bb - x2 * (k0 * k0) * (q.bb + 2.0 * q.ab) + x2 * x2 * (k0 * k0 * k0 * k0) * q.aa;
  const R B0 = k0 * q.bb - x2 * (k0 * k0 * k0) * q.ab;
  const R dA = -x2 * dk2 * (q.bb + 2.0 * q.ab) + x2 * x2 * dk4 * q.aa;
  const R dB = dk * q.bb - x2 * dk3 * q.ab;
  const R half = dphase * 0.5;
  const R mid = phase0 + half;
  const R sh = sin(half);
  const R dcos = -2.0 * sin(mid) * sh;
  const R dsin = 2.0 * cos(mid) * sh;
  const R phase1 = phase0 + dphase;
  const R c1 = cos(phase1), s1 = sin(phase1);
  const R A1 = A0 + dA, B1 = B0 + dB;
  const R new_amp = 2.0 * A1 * c1 / (x5 * x) + 4.0 * B1 * s1 / x5;
  const R change = 2.0 * (dA * c1 + A0 * dcos) / (x5 * x) + 4.0 * (dB * s1 + B0 * dsin) / x5;
  return dU * new_amp + U0 * change;
}

// Doppler form minus the static form at the same separation.
template <class R>
R doppler_shift(const R &x, const Contractions<R> &q, const PairState &s, Mode mode) {
  const StaticParams p = doppler_map(s);
  const double dk = -s.beta_R;
  const double ddelta = -s.rho * s.beta_R;
  const double dU = s.U.value * s.rho * s.beta_R / p.delta;
  R w = oscillating_pair_shift(x, q, 1.0, dk, s.U.value, dU, x * 2.0, x * (2.0 * dk));
  if (mode == Mode::Instantaneous) {
    if (!std::isfinite(s.T_red)) throw DomainError("instantaneous mode needs a finite observation time");
    const R phase0 = x * (2.0 * s.rho) + s.delta() * s.T_red;
    w = w - oscillating_pair_shift(x, q, s.rho, 0.0, s.U.value, dU, phase0, R(ddelta * s.T_red));
  }
  return w;
}

void check_causality(const PairState &s, double x) {
  if (std::isinf(s.T_red)) return;
  if (!(s.T_red * (1.0 + s.beta_R) > 2.0 * x)) {
    std::ostringstream os;
    os << "causality violated: T(1+beta_R) = " << s.T_red * (1.0 + s.beta_R) << " <= 2x = " << 2.0 * x;
    throw CausalityError(os.str());
  }
}

template <class R> R theta_form(const R &x, const Contractions<R> &q, const PairState &s) {
  using std::cos;
  using std::sin;
  const double rho = s.rho;
  const double pre = s.U.value * s.delta() * s.beta_R;
  const R x2 = x * x;
  const R rx2 = x2 * (rho * rho);
  const R x4 = x2 * x2;
  const R c1 = q.bb - rx2 * (q.bb + 2.0 * q.ab) + rx2 * rx2 * q.aa;
  const R c2 = q.bb - rx2 * q.ab;
  return (2.0 * pre) * c1 * sin(x * 2.0) / (x4 * x) - (4.0 * pre * rho) * c2 * cos(x * 2.0) / x4;
}

template <class R> R lag_form(const R &x, const Contractions<R> &q, const PairState &s) {
  using std::cos;
  using std::sin;
  const double d = s.delta();
  if (d == 0.0) throw PoleError("lag term: zero detuning");
  const R x2 = x * x;
  const R x3 = x2 * x;
  const R x4 = x2 * x2;
  const R s2 = sin(x * 2.0);
  const R c2 = cos(x * 2.0);
  const R even = 3.0 * q.bb / (x4 * x2) + 2.0 * (q.bb + 2.0 * q.ab) / x4 + q.aa / x2;
  const R odd = 5.0 * q.bb / (x4 * x) - 3.0 * q.ab / x3;
  const R br = (x * (2.0 * d) * c2 - s2) * even - (x * (2.0 * d) * s2 + c2) * odd;
  return br * (2.0 * s.U.value * s.beta_R / d) / x;
}

template <class R> struct VelocityEnergy {
  R dop, theta, lag;
};

template <class R>
VelocityEnergy<R> velocity_energy(const Vec3<R> &Rv, const PairState &s, const Orientation &o, Mode mode) {
  const R x = kern::length(Rv);
  if (!(value_of(x) > 0.0)) throw DomainError("separation must be positive");
  const Contractions<R> q = contractions(Rv / x, o);
  check_causality(s, value_of(x));
  VelocityEnergy<R> e;
  e.dop = doppler_shift(x, q, s, mode);
  e.theta = theta_form(x, q, s);
  e.lag = lag_form(x, q, s);
  return e;
}

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x must be positive and finite");
}

}  // namespace

PairState PairState::make(double x, double rho, double beta_R, double beta_perp) {
  PairState s;
  s.x = x;
  s.rho = rho;
  s.beta_R = beta_R;
  s.beta_perp = beta_perp;
  s.U = CouplingU{rho < 1.0 ? 1.0 : -1.0};
  return s;
}

PairState PairState::from_vectors(const Vec3d &R, const Vec3d &beta, double rho, CouplingU U) {
  PairState s;
  s.x = norm(R);
  check_x(s.x);
  s.r_hat = R / s.x;
  s.rho = rho;
  s.U = U;
  s.beta_R = dot(beta, s.r_hat);
  const Vec3d bp = beta - s.r_hat * s.beta_R;
  s.beta_perp = norm(bp);
  if (s.beta_perp > 0.0) {
    s.perp_dir = bp / s.beta_perp;
  } else {
    // any direction orthogonal to r_hat
    const Vec3d trial = std::abs(s.r_hat[0]) < 0.9 ? Vec3d{1.0, 0.0, 0.0} : Vec3d{0.0, 1.0, 0.0};
    const Vec3d p = trial - s.r_hat * dot(trial, s.r_hat);
    s.perp_dir = p / norm(p);
  }
  return s;
}

StaticParams static_params(const PairState &s) { return {1.0, s.rho, s.delta(), s.U.value}; }

StaticParams doppler_map(const PairState &s) {
  const double dt = 1.0 - s.rho * (1.0 + s.beta_R);
  if (dt == 0.0) throw PoleError("Doppler-shifted detuning vanishes");
  return {1.0 - s.beta_R, s.rho, dt, s.U.value * s.delta() / dt};
}

double w_static(double x, const Vec3d &r_hat, const Orientation &o, const StaticParams &p, double T_red,
                Mode mode) {
  check_x(x);
  return static_form(x, contractions(r_hat, o), p, T_red, mode);
}

double w_zero(const PairState &s, const Orientation &o, Mode mode) {
  return w_static(s.x, s.r_hat, o, static_params(s), s.T_red, mode);
}

double w_doppler(const PairState &s, const Orientation &o, Mode mode) {
  return w_static(s.x, s.r_hat, o, doppler_map(s), s.T_red, mode);
}

double w_theta(const PairState &s, const Orientation &o) {
  check_x(s.x);
  check_causality(s, s.x);
  return theta_form(s.x, contractions(s.r_hat, o), s);
}

double w_lag(const PairState &s, const Orientation &o) {
  check_x(s.x);
  return lag_form(s.x, contractions(s.r_hat, o), s);
}

EnergyBreakdown energies(const PairState &s, const Orientation &o, Mode mode) {
  return {w_zero(s, o, mode), w_theta(s, o), w_doppler(s, o, mode), w_lag(s, o), mode == Mode::TimeAveraged};
}

double velocity_energy_at(const PairState &s, const Orientation &o, const Vec3d &R, Mode mode) {
  const auto e = velocity_energy(R, s, o, mode);
  return e.dop + e.theta + e.lag;
}

ForceBreakdown vdw_force_components(const PairState &s, const Orientation &o, Mode mode) {
  check_x(s.x);
  const Vec3d R0 = s.R_vec();
  ForceBreakdown f;
  for (int j = 0; j < 3; ++j) {
    Vec3<JetD> Rj{JetD(R0[0]), JetD(R0[1]), JetD(R0[2])};
    Rj[j].d = 1.0;
    const auto e = velocity_energy(Rj, s, o, mode);
    f.vdw_doppler[j] = -0.5 * e.dop.d;
    f.vdw_theta[j] = -0.5 * e.theta.d;
    f.vdw_lag[j] = -0.5 * e.lag.d;
  }
  return f;
}

Vec3d vdw_force(const PairState &s, const Orientation &o, Mode mode) {
  return vdw_force_components(s, o, mode).vdw();
}

Vec3d vdw_force_asymptotic(const PairState &s, Regime regime, std::vector<std::string> *warnings) {
  check_x(s.x);
  const double d = s.delta();
  if (d == 0.0) throw PoleError("asymptotic force: zero detuning");
  const double U = s.U.value;
  const double x = s.x;
  if (regime == Regime::Near) {
    if (warnings && !(x < kNearThreshold)) warnings->push_back("near-field law used at x >= 0.1");
    return s.r_hat * (-20.0 * U * (1.0 + s.rho) * s.beta_R / (d * std::pow(x, 7)));
  }
  if (warnings && !(x > kFarThreshold)) warnings->push_back("far-field law used at x <= 10");
  const double br = std::sin(2.0 * x) - 2.0 * d * x * std::cos(2.0 * x);
  return s.r_hat * (4.0 * U * s.rho * br * s.beta_R / (9.0 * d * x * x));
}

}  // namespace vdf
