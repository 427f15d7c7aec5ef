#include "vdf/roentgen.hpp"

#include <cmath>
#include <numbers>

#include "vdf/errors.hpp"
#include "vdf/greens.hpp"

namespace vdf {
namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

Vec3<CJet> lift_jet(const Vec3d &a) { return {CJet(cplx(a[0])), CJet(cplx(a[1])), CJet(cplx(a[2]))}; }

void check_state(const PairState &s) {
  if (!(s.x > 0.0) || !std::isfinite(s.x)) throw DomainError("x must be positive and finite");
}

// Conservative potential in the reduced units of the force prefactor, for separation R.
template <class C> C potential(const Vec3<C> &R, const Vec3d &beta, const Orientation &o) {
  const C k(cplx(1.0));
  const Mat3<C> G = kern::green_electric(k, R);
  const Mat3<C> Gm = kern::green_magnetic(k, R);
  const Vec3<C> b{C(cplx(beta[0])), C(cplx(beta[1])), C(cplx(beta[2]))};
  if (o.isotropic) {
    const Mat3<C> P = Gm * G;
    C s{};
    for (int i = 0; i < 3; ++i) {
      const int l = (i + 1) % 3, m = (i + 2) % 3;
      // eps_{ilm} beta_l P_{mi}, cyclic and anticyclic parts
      s += b[l] * P(m, i) - b[m] * P(l, i);
    }
    return s * (1.0 / 9.0);
  }
  const Vec3<C> muA = lift_vec<C>(o.muA);
  const Vec3<C> muB = lift_vec<C>(o.muB);
  return dot(muA, cross(b, Gm * muB)) * dot(muB, G * muA);
}

}  // namespace

RncInputs rnc_inputs(const PairState &s) {
  check_state(s);
  const CJet k = CJet::variable(cplx(1.0));
  const Vec3<CJet> R = lift_jet(s.R_vec());
  const Vec3<CJet> v = lift_jet(s.velocity());
  const auto d = kern::lag_density(k, R, v);
  return {kern::green_electric(k, R), kern::green_magnetic(k, R), d.G_R + d.G_perp, d.Gm_R + d.Gm_perp};
}

Vec3d rnc_assemble(const RncInputs &in, const Orientation &o, double U, double delta) {
  if (delta == 0.0) throw PoleError("non-conservative Roentgen force: zero detuning");
  Vec3c w;
  if (o.isotropic) {
    const DyadicJet Z = in.DGm * in.G + in.Gm * in.DG;
    Mat3<cplx> B;
    for (std::size_t i = 0; i < 9; ++i) B.m[i] = 6.0 * Z.m[i].v + Z.m[i].d;
    w = levi_civita_contract(B) * cplx(1.0 / 9.0);
  } else {
    const Vec3<CJet> muA = lift_jet(o.muA);
    const Vec3<CJet> muB = lift_jet(o.muB);
    const Vec3<CJet> Y = (in.DGm * muB) * dot(muB, in.G * muA) + (in.Gm * muB) * dot(muB, in.DG * muA);
    Vec3c B;
    for (int i = 0; i < 3; ++i) B[i] = 6.0 * Y[i].v + Y[i].d;
    w = cross(lift_vec<cplx>(o.muA), B);
  }
  return real(w) * (-8.0 * pi2 * U / delta);
}

Vec3d roentgen_nonconservative(const PairState &s, const Orientation &o) {
  return rnc_assemble(rnc_inputs(s), o, s.U.value, s.delta());
}

double roentgen_potential_at(const PairState &s, const Orientation &o, const Vec3d &R) {
  if (norm(R) == 0.0) throw SingularityError("zero separation");
  const Vec3c Rc{cplx(R[0]), cplx(R[1]), cplx(R[2])};
  return potential(Rc, s.velocity(), o).real();
}

Vec3d roentgen_conservative(const PairState &s, const Orientation &o) {
  check_state(s);
  const Vec3d R0 = s.R_vec();
  const Vec3d beta = s.velocity();
  Vec3d f;
  for (int j = 0; j < 3; ++j) {
    Vec3<CJet> R = lift_jet(R0);
    R[j].d = 1.0;
    f[j] = -16.0 * pi2 * s.U.value * potential(R, beta, o).d.real();
  }
  return f;
}

RoentgenRatios roentgen_ratios(const PairState &s) {
  const double ad = std::abs(s.delta());
  return {s.x * s.x * ad, ad, s.x * s.x};
}

RontgenResult roentgen(const PairState &s, const Orientation &o) {
  return {roentgen_conservative(s, o), roentgen_nonconservative(s, o), roentgen_ratios(s)};
}

ForceBreakdown force_breakdown(const PairState &s, const Orientation &o, Mode mode) {
  ForceBreakdown f = vdw_force_components(s, o, mode);
  f.roentgen_c = roentgen_conservative(s, o);
  f.roentgen_nc = roentgen_nonconservative(s, o);
  return f;
}

}  // namespace vdf
