#pragma once

#include <limits>
#include <string>
#include <vector>

#include "vdf/dipole_avg.hpp"
#include "vdf/linalg.hpp"

namespace vdf {

enum class Mode { TimeAveraged, Instantaneous };
enum class Regime { Near, Far };

inline constexpr double kNearThreshold = 0.1;
inline constexpr double kFarThreshold = 10.0;

// Reduced pair state. Lengths in 1/k_A, velocities in c, times in 1/(c k_A).
struct PairState {
  double x = 1.0;
  Vec3d r_hat{0.0, 0.0, 1.0};
  double rho = 0.98;
  double beta_R = 0.0;
  double beta_perp = 0.0;
  Vec3d perp_dir{1.0, 0.0, 0.0};
  double T_red = std::numeric_limits<double>::infinity();
  CouplingU U{1.0};
  double gammaA_red = 0.0;
  double gammaB_red = 0.0;

  double delta() const { return 1.0 - rho; }
  Vec3d R_vec() const { return r_hat * x; }
  Vec3d velocity() const { return r_hat * beta_R + perp_dir * beta_perp; }

  // Coupling with the sign of the detuning and unit magnitude.
  static PairState make(double x, double rho, double beta_R, double beta_perp = 0.0);
  // Rebuild r_hat, beta_R, beta_perp and perp_dir from a separation and a velocity vector.
  static PairState from_vectors(const Vec3d &R, const Vec3d &beta, double rho, CouplingU U);
};

// Parameters of the static (v = 0) functional form. The Doppler term is the
// same form with k -> k~, Delta -> Delta~, U -> U~.
struct StaticParams {
  double k = 1.0;
  double kB = 1.0;
  double delta = 0.0;
  double U = 1.0;
};

StaticParams static_params(const PairState &s);
// k~ = 1 - beta_R, Delta~ = 1 - rho(1 + beta_R), U~ = U Delta/Delta~. Throws PoleError if Delta~ = 0.
StaticParams doppler_map(const PairState &s);

// Evaluate the static form at reduced separation x with contractions taken along r_hat.
double w_static(double x, const Vec3d &r_hat, const Orientation &o, const StaticParams &p, double T_red,
                Mode mode);

struct EnergyBreakdown {
  double w_zero = 0.0;
  double w_theta = 0.0;
  double w_dop = 0.0;
  double w_lag = 0.0;
  bool time_averaged = true;
};

double w_zero(const PairState &s, const Orientation &o, Mode mode = Mode::TimeAveraged);
double w_theta(const PairState &s, const Orientation &o);
double w_doppler(const PairState &s, const Orientation &o, Mode mode = Mode::TimeAveraged);
double w_lag(const PairState &s, const Orientation &o);
EnergyBreakdown energies(const PairState &s, const Orientation &o, Mode mode = Mode::TimeAveraged);

// W_dop - W0 + W_Theta + W_Lag at separation R, with beta_R held at the state's value.
double velocity_energy_at(const PairState &s, const Orientation &o, const Vec3d &R, Mode mode = Mode::TimeAveraged);

struct ForceBreakdown {
  Vec3d vdw_doppler;
  Vec3d vdw_lag;
  Vec3d vdw_theta;
  Vec3d roentgen_c;
  Vec3d roentgen_nc;

  Vec3d vdw() const { return vdw_doppler + vdw_lag + vdw_theta; }
  Vec3d total() const { return vdw() + roentgen_c + roentgen_nc; }
};

// -1/2 grad of the velocity-dependent energy; fills the three vdW components only.
ForceBreakdown vdw_force_components(const PairState &s, const Orientation &o, Mode mode = Mode::TimeAveraged);
Vec3d vdw_force(const PairState &s, const Orientation &o, Mode mode = Mode::TimeAveraged);

// Isotropic near/far-field laws. Out-of-regime use appends an advisory to warnings.
Vec3d vdw_force_asymptotic(const PairState &s, Regime regime, std::vector<std::string> *warnings = nullptr);

}  // namespace vdf
