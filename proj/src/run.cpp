#include "vdf/run.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "json.hpp"
#include "vdf/errors.hpp"

namespace vdf {
namespace {

Vec3d component(const ForceBreakdown &f, const std::string &name) {
  if (name == "vdw_doppler") return f.vdw_doppler;
  if (name == "vdw_lag") return f.vdw_lag;
  if (name == "vdw_theta") return f.vdw_theta;
  if (name == "roentgen_c") return f.roentgen_c;
  if (name == "roentgen_nc") return f.roentgen_nc;
  if (name == "vdw") return f.vdw();
  return f.total();
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string> &v, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

ForceBreakdown plate_breakdown(const PlateConfig &pc, const Orientation &o, double tol) {
  auto state_at = [pc](double x, double y, double d) {
    PairState s = PairState::from_vectors(Vec3d{-x, -y, d}, pc.velocity(), pc.rho, pc.U);
    s.T_red = pc.T_red;
    return s;
  };
  auto by = [&](Vec3d ForceBreakdown::*member) {
    PairForce f = [&, member](double x, double y, double d) {
      return vdw_force_components(state_at(x, y, d), o).*member;
    };
    return plate_integrate(f, pc, tol).value;
  };
  ForceBreakdown fb;
  fb.vdw_doppler = by(&ForceBreakdown::vdw_doppler);
  fb.vdw_lag = by(&ForceBreakdown::vdw_lag);
  fb.vdw_theta = by(&ForceBreakdown::vdw_theta);
  fb.roentgen_c = plate_integrate(plate_pair_rc(pc, o), pc, tol).value;
  fb.roentgen_nc = plate_integrate(plate_pair_rnc(pc, o), pc, tol).value;
  return fb;
}

Record evaluate(const RunConfig &cfg, int index, const std::string &var, double value) {
  Record r;
  r.index = index;
  r.sweep_variable = var;
  r.sweep_value = value;
  r.geometry = std::holds_alternative<PairGeometry>(cfg.geometry) ? "pair" : "plate";
  try {
    const Reduced red = to_reduced(cfg);
    r.warnings = red.warnings;
    if (const auto *s = std::get_if<PairState>(&red.state)) {
      r.x = s->x;
      r.rho = s->rho;
      r.beta_R = s->beta_R;
      r.beta_perp = s->beta_perp;
      r.T_red = s->T_red;
      r.force = force_breakdown(*s, cfg.orientation);
    } else {
      const auto &pc = std::get<PlateConfig>(red.state);
      r.x = pc.d_red;
      r.rho = pc.rho;
      r.beta_perp = pc.beta;
      r.T_red = pc.T_red;
      r.force = plate_breakdown(pc, cfg.orientation, cfg.plate_tolerance);
    }
    r.regime = regime_label(r.x);
    r.total_N = r.force.total() * red.scales.force;
  } catch (const Error &e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::string regime_label(double x) {
  if (x < kNearThreshold) return "near";
  if (x > kFarThreshold) return "far";
  return "crossover";
}

std::vector<Record> run(const RunConfig &cfg, unsigned threads) {
  std::vector<double> values;
  std::string var;
  if (cfg.sweep) {
    values = sweep_values(*cfg.sweep);
    var = to_string(cfg.sweep->variable);
  }
  if (values.empty()) {
    return {evaluate(cfg, 0, "", std::nan(""))};
  }
  std::vector<Record> out(values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < values.size();) {
      out[i] = evaluate(apply_sweep(cfg, cfg.sweep->variable, values[i]), static_cast<int>(i), var, values[i]);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(values.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  return out;
}

const std::vector<std::string> &all_components() {
  static const std::vector<std::string> c{"vdw_doppler", "vdw_lag", "vdw_theta", "roentgen_c", "roentgen_nc", "total"};
  return c;
}

void write_csv(std::ostream &os, const std::vector<Record> &recs, const std::vector<std::string> &components) {
  const auto &comps = components.empty() ? all_components() : components;
  os << "schema,index,geometry,sweep_variable,sweep_value,x,rho,beta_R,beta_perp,T_red,regime";
  for (const auto &c : comps) os << ',' << c << "_x," << c << "_y," << c << "_z";
  os << ",total_x_N,total_y_N,total_z_N,warnings,error\n";
  for (const auto &r : recs) {
    os << kRunSchema << ',' << r.index << ',' << r.geometry << ',' << r.sweep_variable << ','
       << (std::isnan(r.sweep_value) ? "" : num(r.sweep_value)) << ',' << num(r.x) << ',' << num(r.rho) << ','
       << num(r.beta_R) << ',' << num(r.beta_perp) << ',' << num(r.T_red) << ',' << r.regime;
    for (const auto &c : comps) {
      const Vec3d v = component(r.force, c);
      os << ',' << num(v[0]) << ',' << num(v[1]) << ',' << num(v[2]);
    }
    os << ',' << num(r.total_N[0]) << ',' << num(r.total_N[1]) << ',' << num(r.total_N[2]) << ','
       << csv_quote(join(r.warnings, "; ")) << ',' << csv_quote(r.error) << '\n';
  }
}

void write_jsonl(std::ostream &os, const std::vector<Record> &recs, const std::vector<std::string> &components) {
  const auto &comps = components.empty() ? all_components() : components;
  for (const auto &r : recs) {
    nlohmann::ordered_json j;
    j["schema"] = kRunSchema;
    j["index"] = r.index;
    j["geometry"] = r.geometry;
    if (!r.sweep_variable.empty()) {
      j["sweep_variable"] = r.sweep_variable;
      j["sweep_value"] = r.sweep_value;
    }
    j["x"] = r.x;
    j["rho"] = r.rho;
    j["beta_R"] = r.beta_R;
    j["beta_perp"] = r.beta_perp;
    j["T_red"] = std::isfinite(r.T_red) ? nlohmann::ordered_json(r.T_red) : nlohmann::ordered_json(nullptr);
    j["regime"] = r.regime;
    for (const auto &c : comps) {
      const Vec3d v = component(r.force, c);
      j["components"][c] = {v[0], v[1], v[2]};
    }
    j["total_N"] = {r.total_N[0], r.total_N[1], r.total_N[2]};
    j["warnings"] = r.warnings;
    j["error"] = r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error);
    os << j.dump() << '\n';
  }
}

}  // namespace vdf
