#pragma once

#include "vdf/jet.hpp"
#include "vdf/vdw.hpp"

namespace vdf {

using CJet = Jet<cplx>;
using DyadicJet = Mat3<CJet>;

struct RoentgenRatios {
  double near_ratio = 0.0;     // x^2 |1 - rho|
  double far_ratio_c = 0.0;    // |1 - rho|
  double near_ratio_nc = 0.0;  // x^2
};

struct RontgenResult {
  Vec3d f_conservative;
  Vec3d f_nonconservative;
  RoentgenRatios ratios;
};

// Inputs of the non-conservative assembly: Green's dyadics and lag densities
// (lag corrections per unit lag time), each carrying its k-derivative.
struct RncInputs {
  DyadicJet G, Gm, DG, DGm;
};

RncInputs rnc_inputs(const PairState &s);

// -(8 pi^2 U / Delta) Re{ muA x [6 Y + k dY/dk] } at k = k_A, with
// Y = (muB.G.muA)(DGm muB) + (muB.DG.muA)(Gm muB), or its isotropic average.
Vec3d rnc_assemble(const RncInputs &in, const Orientation &o, double U, double delta);

Vec3d roentgen_conservative(const PairState &s, const Orientation &o);
Vec3d roentgen_nonconservative(const PairState &s, const Orientation &o);
RoentgenRatios roentgen_ratios(const PairState &s);
RontgenResult roentgen(const PairState &s, const Orientation &o);

// Re S with S = (muA.(beta x Gm muB))(muB.G.muA); its gradient gives the conservative force.
double roentgen_potential_at(const PairState &s, const Orientation &o, const Vec3d &R);

// vdW components plus both Roentgen forces.
ForceBreakdown force_breakdown(const PairState &s, const Orientation &o, Mode mode = Mode::TimeAveraged);

}  // namespace vdf
