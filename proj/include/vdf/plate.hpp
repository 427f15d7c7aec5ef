#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vdf/roentgen.hpp"

namespace vdf {

// Plate in the plane z = 0, atom at height d on the z axis, velocity parallel to the plate.
struct PlateConfig {
  double d_red = 1.0;
  double sigma_red = 1.0;
  double beta = 0.0;
  Vec3d v_dir{1.0, 0.0, 0.0};
  double rho = 0.98;
  CouplingU U{1.0};
  double T_red = std::numeric_limits<double>::infinity();
  double gammaA_red = 0.0;
  double gammaB_red = 0.0;

  double delta() const { return 1.0 - rho; }
  Vec3d velocity() const { return v_dir * beta; }
};

// Force on the atom from one plate atom at in-plane position (x, y), atom height d.
using PairForce = std::function<Vec3d(double x, double y, double d)>;

PairForce plate_pair_vdw(const PlateConfig &cfg, const Orientation &o = Orientation::iso());
PairForce plate_pair_rnc(const PlateConfig &cfg, const Orientation &o = Orientation::iso());
PairForce plate_pair_rc(const PlateConfig &cfg, const Orientation &o = Orientation::iso());

Vec3d plate_vdw_closed(const PlateConfig &cfg, Regime regime, std::vector<std::string> *warnings = nullptr);
Vec3d plate_roentgen_closed(const PlateConfig &cfg, std::vector<std::string> *warnings = nullptr);

struct PlateIntegral {
  Vec3d value;
  double error = 0.0;
  int panels = 0;
};

struct PlateQuadratureOptions {
  int azimuth_points = 64;
  int max_panels = 4000;
};

// sigma * integral over the plane of pair_force. Throws ConvergenceError carrying the
// achieved estimate when the panel budget runs out.
PlateIntegral plate_integrate(const PairForce &pair_force, const PlateConfig &cfg, double tol,
                              const PlateQuadratureOptions &opt = {});

}  // namespace vdf
