#include "vdf/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vdf/errors.hpp"

namespace vdf {
namespace {

namespace pt = boost::property_tree;

constexpr double two_pi = 2.0 * std::numbers::pi;
// "much less than" in the quasiresonant window: |Delta| <= 0.1 omega
constexpr double kDetuningFraction = 0.1;

double get_positive(const pt::ptree &t, const std::string &key) {
  const auto v = t.get_optional<double>(key);
  if (!v) throw ConfigError("missing or non-numeric key: " + key);
  if (!(*v > 0.0) || !std::isfinite(*v)) throw ConfigError(key + " must be positive");
  return *v;
}

double get_nonneg(const pt::ptree &t, const std::string &key, double fallback) {
  const double v = t.get<double>(key, fallback);
  if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(key + " must be non-negative");
  return v;
}

Vec3d get_vec(const pt::ptree &t, const std::string &key, const Vec3d &fallback) {
  const auto s = t.get_optional<std::string>(key);
  if (!s) return fallback;
  std::istringstream is(*s);
  Vec3d v;
  if (!(is >> v[0] >> v[1] >> v[2])) throw ConfigError(key + " needs three numbers");
  return v;
}

AtomSpecies parse_atom(const pt::ptree &root, const std::string &section) {
  const auto t = root.get_child_optional(section);
  if (!t) throw ConfigError("missing section [" + section + "]");
  AtomSpecies a;
  a.name = t->get<std::string>("name", section);
  a.omega = get_positive(*t, "omega");
  a.dipole = get_positive(*t, "dipole");
  a.linewidth = get_positive(*t, "linewidth");
  a.mass = get_positive(*t, "mass");
  return a;
}

SweepVariable parse_variable(const std::string &s) {
  if (s == "separation") return SweepVariable::Separation;
  if (s == "height") return SweepVariable::Height;
  if (s == "speed") return SweepVariable::Speed;
  if (s == "rho") return SweepVariable::Rho;
  throw ConfigError("unknown sweep variable: " + s);
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

RunConfig from_tree(const pt::ptree &root) {
  RunConfig c;
  c.atom_a = parse_atom(root, "atom_a");
  c.atom_b = parse_atom(root, "atom_b");

  const auto pair = root.get_child_optional("pair");
  const auto plate = root.get_child_optional("plate");
  if (static_cast<bool>(pair) == static_cast<bool>(plate))
    throw ConfigError("exactly one of [pair] or [plate] is required");
  if (pair) {
    PairGeometry g;
    g.separation = get_positive(*pair, "separation");
    g.velocity = get_vec(*pair, "velocity", Vec3d{});
    c.geometry = g;
  } else {
    PlateGeometry g;
    g.height = get_positive(*plate, "height");
    g.density = get_positive(*plate, "density");
    g.speed = get_nonneg(*plate, "speed", 0.0);
    c.geometry = g;
  }

  if (const auto s = root.get_child_optional("sweep")) {
    SweepSpec sw;
    sw.variable = parse_variable(s->get<std::string>("variable", "separation"));
    const std::string grid = s->get<std::string>("grid", "log");
    if (grid == "log") sw.grid = Grid::Log;
    else if (grid == "linear") sw.grid = Grid::Linear;
    else throw ConfigError("grid must be log or linear");
    sw.min = get_positive(*s, "min");
    sw.max = get_positive(*s, "max");
    if (!(sw.max > sw.min)) throw ConfigError("sweep bounds must be ordered (min < max)");
    sw.count = s->get<int>("count", 10);
    if (sw.count < 1) throw ConfigError("sweep count must be at least 1");
    const bool is_pair = static_cast<bool>(pair);
    if ((sw.variable == SweepVariable::Separation && !is_pair) || (sw.variable == SweepVariable::Height && is_pair))
      throw ConfigError("sweep variable does not match the geometry block");
    c.sweep = sw;
  }

  if (const auto o = root.get_child_optional("output")) {
    const std::string f = o->get<std::string>("format", "csv");
    if (f == "csv") c.output.format = Format::Csv;
    else if (f == "jsonl") c.output.format = Format::Jsonl;
    else throw ConfigError("output format must be csv or jsonl");
    c.output.path = o->get<std::string>("path", "");
    c.output.components = split_list(o->get<std::string>("components", ""));
  }

  if (const auto v = root.get_child_optional("validity")) {
    const std::string e = v->get<std::string>("enforce", "warn");
    if (e == "strict") c.strict = true;
    else if (e == "warn") c.strict = false;
    else throw ConfigError("validity.enforce must be strict or warn");
  }

  if (const auto t = root.get_child_optional("observation")) {
    if (t->get_optional<std::string>("time")) c.observation_time = get_positive(*t, "time");
  }

  if (const auto o = root.get_child_optional("orientation")) {
    const std::string mode = o->get<std::string>("mode", "isotropic");
    if (mode == "fixed") {
      try {
        c.orientation = Orientation::fixed(get_vec(*o, "muA", Vec3d{0, 0, 1}), get_vec(*o, "muB", Vec3d{0, 0, 1}));
      } catch (const NormalizationError &e) {
        throw ConfigError(std::string("orientation: ") + e.what());
      }
    } else if (mode != "isotropic") {
      throw ConfigError("orientation.mode must be isotropic or fixed");
    }
  }

  if (const auto q = root.get_child_optional("quadrature")) c.plate_tolerance = get_positive(*q, "tolerance");
  return c;
}

void check_window(bool ok, const std::string &what, bool strict, std::vector<std::string> &warnings) {
  if (ok) return;
  if (strict) throw ValidityError(what);
  warnings.push_back(what);
}

}  // namespace

RunConfig parse_config_string(const std::string &text) {
  pt::ptree root;
  std::istringstream is(text);
  try {
    pt::read_ini(is, root);
  } catch (const pt::ini_parser_error &e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  return from_tree(root);
}

RunConfig parse_config_file(const std::string &path) {
  pt::ptree root;
  try {
    pt::read_ini(path, root);
  } catch (const pt::ini_parser_error &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return from_tree(root);
}

Reduced to_reduced(const RunConfig &cfg) {
  const AtomSpecies &A = cfg.atom_a;
  const AtomSpecies &B = cfg.atom_b;
  const double Delta = A.omega - B.omega;
  if (Delta == 0.0) throw ConfigError("zero detuning: omega_A equals omega_B");

  Reduced out;
  Scales &sc = out.scales;
  sc.kA = A.omega / si::c;
  const double fpe = 4.0 * std::numbers::pi * si::eps0;
  sc.U_si = A.dipole * A.dipole * B.dipole * B.dipole / (fpe * fpe * si::hbar * Delta);
  sc.energy = std::abs(sc.U_si) * std::pow(sc.kA, 6);
  sc.force = sc.energy * sc.kA;
  sc.time = 1.0 / (si::c * sc.kA);

  const double absD = std::abs(Delta);
  const double gmax = std::max(A.linewidth, B.linewidth);
  check_window(A.linewidth < absD && B.linewidth < absD,
               "quasiresonant window violated: Gamma_{A,B} < Delta_{AB} fails", cfg.strict, out.warnings);
  check_window(absD <= kDetuningFraction * std::min(A.omega, B.omega),
               "quasiresonant window violated: Delta_{AB} << omega_{A,B} fails (|Delta| > 0.1 omega)", cfg.strict,
               out.warnings);
  const double T = cfg.observation_time ? *cfg.observation_time : std::sqrt((two_pi / absD) * (two_pi / gmax));
  check_window(two_pi / absD < T && T < two_pi / gmax,
               "observation window violated: 2pi/|Delta_{AB}| < T << 2pi/Gamma_{A,B} fails", cfg.strict, out.warnings);

  const double rho = B.omega / A.omega;
  const CouplingU U{Delta > 0.0 ? 1.0 : -1.0};
  const double T_red = T / sc.time;
  const double gA = A.linewidth / A.omega;
  const double gB = B.linewidth / A.omega;

  if (const auto *p = std::get_if<PairGeometry>(&cfg.geometry)) {
    PairState s = PairState::from_vectors(Vec3d{0.0, 0.0, p->separation * sc.kA}, p->velocity / si::c, rho, U);
    s.T_red = T_red;
    s.gammaA_red = gA;
    s.gammaB_red = gB;
    out.state = s;
  } else {
    const auto &g = std::get<PlateGeometry>(cfg.geometry);
    PlateConfig pc;
    pc.d_red = g.height * sc.kA;
    pc.sigma_red = g.density / (sc.kA * sc.kA);
    pc.beta = g.speed / si::c;
    pc.rho = rho;
    pc.U = U;
    pc.T_red = T_red;
    pc.gammaA_red = gA;
    pc.gammaB_red = gB;
    out.state = pc;
  }
  return out;
}

std::vector<double> sweep_values(const SweepSpec &s) {
  std::vector<double> v;
  if (s.count == 1) return {s.min};
  for (int i = 0; i < s.count; ++i) {
    const double t = static_cast<double>(i) / (s.count - 1);
    if (s.grid == Grid::Log) v.push_back(s.min * std::pow(s.max / s.min, t));
    else v.push_back(s.min + (s.max - s.min) * t);
  }
  return v;
}

RunConfig apply_sweep(const RunConfig &cfg, SweepVariable var, double value) {
  RunConfig c = cfg;
  switch (var) {
    case SweepVariable::Separation:
      std::get<PairGeometry>(c.geometry).separation = value;
      break;
    case SweepVariable::Height:
      std::get<PlateGeometry>(c.geometry).height = value;
      break;
    case SweepVariable::Speed:
      if (auto *p = std::get_if<PairGeometry>(&c.geometry)) {
        const double n = norm(p->velocity);
        p->velocity = n > 0.0 ? p->velocity * (value / n) : Vec3d{0.0, 0.0, value};
      } else {
        std::get<PlateGeometry>(c.geometry).speed = value;
      }
      break;
    case SweepVariable::Rho:
      c.atom_b.omega = value * c.atom_a.omega;
      break;
  }
  return c;
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Separation: return "separation";
    case SweepVariable::Height: return "height";
    case SweepVariable::Speed: return "speed";
    case SweepVariable::Rho: return "rho";
  }
  return "unknown";
}

}  // namespace vdf
