#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vdf/plate.hpp"

namespace vdf {

namespace si {
inline constexpr double c = 299792458.0;
inline constexpr double eps0 = 8.8541878128e-12;
inline constexpr double hbar = 1.054571817e-34;
}  // namespace si

struct AtomSpecies {
  std::string name;
  double omega = 0.0;      // rad/s
  double dipole = 0.0;     // C m
  double linewidth = 0.0;  // rad/s
  double mass = 0.0;       // kg
};

// Separation along z; velocity components in m/s.
struct PairGeometry {
  double separation = 0.0;
  Vec3d velocity;
};

// Atom at height above the plate, moving along x.
struct PlateGeometry {
  double height = 0.0;
  double density = 0.0;  // m^-2
  double speed = 0.0;    // m/s
};

enum class SweepVariable { Separation, Height, Speed, Rho };
enum class Grid { Log, Linear };

struct SweepSpec {
  SweepVariable variable = SweepVariable::Separation;
  Grid grid = Grid::Log;
  double min = 0.0;
  double max = 0.0;
  int count = 1;
};

enum class Format { Csv, Jsonl };

struct OutputSpec {
  Format format = Format::Csv;
  std::string path;  // empty writes to stdout
  std::vector<std::string> components;
};

struct RunConfig {
  AtomSpecies atom_a, atom_b;
  std::variant<PairGeometry, PlateGeometry> geometry;
  std::optional<SweepSpec> sweep;
  OutputSpec output;
  bool strict = false;
  std::optional<double> observation_time;  // s
  Orientation orientation;
  double plate_tolerance = 1e-6;
};

RunConfig parse_config_file(const std::string &path);
RunConfig parse_config_string(const std::string &text);

// Conversion factors between reduced and SI quantities.
struct Scales {
  double kA = 0.0;       // 1/m
  double U_si = 0.0;     // J m^6, signed
  double energy = 0.0;   // J per reduced energy unit, |U_si| kA^6
  double force = 0.0;    // N per reduced force unit, |U_si| kA^7
  double time = 0.0;     // s per reduced time unit, 1/(c kA)
  double length() const { return 1.0 / kA; }
};

struct Reduced {
  std::variant<PairState, PlateConfig> state;
  Scales scales;
  std::vector<std::string> warnings;
};

// Throws ConfigError for zero detuning or non-positive inputs, ValidityError when the
// quasiresonant or observation-time window fails in strict mode (warnings otherwise).
Reduced to_reduced(const RunConfig &cfg);

std::vector<double> sweep_values(const SweepSpec &s);
RunConfig apply_sweep(const RunConfig &cfg, SweepVariable var, double value);
std::string to_string(SweepVariable v);

}  // namespace vdf
