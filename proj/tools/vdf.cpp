// Command-line front end: pair, plate, sweep and verify subcommands.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vdf/errors.hpp"
#include "vdf/run.hpp"

namespace {

struct Common {
  std::string config;
  std::string out;
  std::string format;
  bool strict = false;
};

void add_common(CLI::App *sub, Common &c) {
  sub->add_option("--config", c.config, "configuration file (INI)")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "output path (default: [output] path or stdout)");
  sub->add_option("--format", c.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  sub->add_flag("--strict", c.strict, "reject configurations outside the validity window");
}

vdf::RunConfig load(const Common &c) {
  vdf::RunConfig cfg = vdf::parse_config_file(c.config);
  if (c.strict) cfg.strict = true;
  if (c.format == "csv") cfg.output.format = vdf::Format::Csv;
  if (c.format == "jsonl") cfg.output.format = vdf::Format::Jsonl;
  if (!c.out.empty()) cfg.output.path = c.out;
  return cfg;
}

template <class Fn> int with_output(const vdf::RunConfig &cfg, Fn &&fn) {
  if (cfg.output.path.empty()) return fn(std::cout);
  std::ofstream os(cfg.output.path);
  if (!os) {
    std::cerr << "error: cannot open " << cfg.output.path << "\n";
    return 2;
  }
  return fn(os);
}

int emit(const vdf::RunConfig &cfg) {
  // strict mode rejects an invalid base configuration before any output
  if (cfg.strict) vdf::to_reduced(cfg);
  const auto recs = vdf::run(cfg);
  int status = 0;
  for (const auto &r : recs) {
    for (const auto &w : r.warnings) std::cerr << "warning [" << r.index << "]: " << w << "\n";
    if (!r.error.empty()) {
      std::cerr << "error [" << r.index << "]: " << r.error << "\n";
      status = 1;
    }
  }
  const int io = with_output(cfg, [&](std::ostream &os) {
    if (cfg.output.format == vdf::Format::Csv) vdf::write_csv(os, recs, cfg.output.components);
    else vdf::write_jsonl(os, recs, cfg.output.components);
    return 0;
  });
  return io ? io : status;
}

std::set<std::string> parse_suites(const std::string &s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) {
    if (!t.empty()) out.insert(t);
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Velocity-dependent van der Waals and Roentgen forces"};
  app.require_subcommand(1);

  Common pair_opts, plate_opts, sweep_opts, verify_opts;
  auto *pair = app.add_subcommand("pair", "single atom-atom evaluation");
  add_common(pair, pair_opts);
  auto *plate = app.add_subcommand("plate", "single atom-plate evaluation");
  add_common(plate, plate_opts);
  auto *sweep = app.add_subcommand("sweep", "evaluate over the [sweep] grid");
  add_common(sweep, sweep_opts);
  auto *verify = app.add_subcommand("verify", "run oracle suites and stream JSONL reports");
  add_common(verify, verify_opts);
  std::string suite_arg;
  verify->add_option("--suite", suite_arg, "comma-separated: gradients,residues,linearity,plate,orientation")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (pair->parsed() || plate->parsed()) {
      const bool want_pair = pair->parsed();
      vdf::RunConfig cfg = load(want_pair ? pair_opts : plate_opts);
      if (std::holds_alternative<vdf::PairGeometry>(cfg.geometry) != want_pair)
        throw vdf::ConfigError(want_pair ? "pair needs a [pair] block" : "plate needs a [plate] block");
      cfg.sweep.reset();
      return emit(cfg);
    }
    if (sweep->parsed()) {
      vdf::RunConfig cfg = load(sweep_opts);
      if (!cfg.sweep) throw vdf::ConfigError("sweep needs a [sweep] block");
      return emit(cfg);
    }
    vdf::RunConfig cfg = load(verify_opts);
    const auto reports = vdf::verify(cfg, parse_suites(suite_arg));
    bool ok = true;
    const int io = with_output(cfg, [&](std::ostream &os) {
      for (const auto &r : reports) {
        os << vdf::to_json(r) << "\n";
        ok = ok && r.passed;
      }
      return 0;
    });
    return io ? io : (ok ? 0 : 1);
  } catch (const vdf::ConfigError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const vdf::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
