#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "vdf/config.hpp"
#include "vdf/errors.hpp"
#include "vdf/run.hpp"

using namespace vdf;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

const char *kAtoms = R"(
[atom_a]
name = A
omega = 2.0e15
dipole = 1.0e-29
linewidth = 1.0e7
mass = 1.0e-25

[atom_b]
name = B
omega = 1.96e15
dipole = 1.0e-29
linewidth = 1.0e7
mass = 1.0e-25
)";

struct Result {
  int status = -1;
  std::string out;
};

fs::path write_temp(const std::string &name, const std::string &text) {
  const fs::path dir = fs::temp_directory_path() / "vdf_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

Result run_cli(const std::string &args) {
  const std::string cmd = std::string(VDF_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE *f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// Minimal CSV reader: the quoted trailing columns are kept raw.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  double num(std::size_t row, const std::string &col) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == col) return std::stod(rows.at(row).at(i));
    FAIL("missing column " << col);
    return 0.0;
  }
};

std::vector<std::string> split(const std::string &line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cell);
      cell.clear();
    } else cell += c;
  }
  out.push_back(cell);
  return out;
}

Csv parse_csv(const std::string &text) {
  Csv c;
  std::istringstream is(text);
  std::string line;
  if (std::getline(is, line)) c.header = split(line);
  while (std::getline(is, line))
    if (!line.empty()) c.rows.push_back(split(line));
  return c;
}

double slope(const std::vector<double> &x, const std::vector<double> &y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string pair_config(const std::string &extra, const std::string &velocity = "0 0 1") {
  return std::string(kAtoms) + "\n[pair]\nseparation = 1.0e-8\nvelocity = " + velocity + "\n" + extra;
}

}  // namespace

TEST_CASE("to_reduced worked example") {
  const RunConfig cfg = parse_config_string(pair_config(""));
  const Reduced red = to_reduced(cfg);
  const auto &s = std::get<PairState>(red.state);
  // x = (2.0e15 / 2.99792458e8) * 1e-8
  CHECK(s.x == doctest::Approx(0.066712819039630).epsilon(1e-12));
  CHECK(s.rho == doctest::Approx(0.98).epsilon(1e-15));
  CHECK(s.U.value == 1.0);
  CHECK(s.beta_R == doctest::Approx(1.0 / 2.99792458e8).epsilon(1e-12));
  CHECK(red.warnings.empty());
}

TEST_CASE("reduced scales round trip") {
  const RunConfig cfg = parse_config_string(pair_config(""));
  const Reduced red = to_reduced(cfg);
  const double kA = 2.0e15 / 299792458.0;
  const double fpe = 4.0 * pi * 8.8541878128e-12;
  const double U = std::pow(1.0e-29, 4) / (fpe * fpe * 1.054571817e-34 * 4.0e13);
  CHECK(std::abs(red.scales.kA / kA - 1.0) < 1e-12);
  CHECK(std::abs(red.scales.U_si / U - 1.0) < 1e-12);
  CHECK(std::abs(red.scales.force / (U * std::pow(kA, 7)) - 1.0) < 1e-12);
  CHECK(std::abs(red.scales.energy / (U * std::pow(kA, 6)) - 1.0) < 1e-12);
  const auto &s = std::get<PairState>(red.state);
  CHECK(std::abs(s.x * red.scales.length() / 1.0e-8 - 1.0) < 1e-12);
  CHECK(std::abs(s.T_red * red.scales.time / std::sqrt((2 * pi / 4e13) * (2 * pi / 1e7)) - 1.0) < 1e-12);
}

TEST_CASE("detuning sign sets the coupling sign") {
  std::string text = pair_config("");
  const auto a = text.find("1.96e15");
  text.replace(a, 7, "2.04e15");
  const Reduced red = to_reduced(parse_config_string(text));
  CHECK(std::get<PairState>(red.state).U.value == -1.0);
  CHECK(std::get<PairState>(red.state).rho == doctest::Approx(1.02));
}

TEST_CASE("config errors") {
  std::string text = pair_config("");
  text.replace(text.find("1.96e15"), 7, "2.0e15");
  CHECK_THROWS_AS(to_reduced(parse_config_string(text)), ConfigError);
  CHECK_THROWS_AS(parse_config_string(std::string(kAtoms)), ConfigError);
  CHECK_THROWS_AS(parse_config_string(pair_config("[plate]\nheight = 1e-8\ndensity = 1e18\n")), ConfigError);
  CHECK_THROWS_AS(parse_config_string(pair_config("[sweep]\nmin = 2e-9\nmax = 1e-9\n")), ConfigError);
  std::string neg = pair_config("");
  neg.replace(neg.find("dipole = 1.0e-29"), 16, "dipole = -1.0e-29");
  CHECK_THROWS_AS(parse_config_string(neg), ConfigError);
}

TEST_CASE("validity window: warn and strict") {
  std::string text = pair_config("");
  text.replace(text.find("linewidth = 1.0e7"), 17, "linewidth = 5.0e13");
  RunConfig cfg = parse_config_string(text);
  const Reduced red = to_reduced(cfg);
  REQUIRE_FALSE(red.warnings.empty());
  CHECK(red.warnings[0].find("quasiresonant") != std::string::npos);
  cfg.strict = true;
  CHECK_THROWS_AS(to_reduced(cfg), ValidityError);
}

TEST_CASE("CLI pair run: header, schema and zero velocity") {
  const fs::path p = write_temp("rest.ini", pair_config("", "0 0 0"));
  const Result r = run_cli("pair --config " + p.string());
  CHECK(r.status == 0);
  const Csv c = parse_csv(r.out);
  REQUIRE(c.rows.size() == 1);
  CHECK(c.header.front() == "schema");
  CHECK(c.header.size() == 11 + 18 + 5);
  CHECK(c.rows[0][0] == "vdf.run/1");
  CHECK(c.num(0, "total_x_N") == 0.0);
  CHECK(c.num(0, "total_y_N") == 0.0);
  CHECK(c.num(0, "total_z_N") == 0.0);
}

TEST_CASE("CLI pair run: jsonl output") {
  const fs::path p = write_temp("pair.ini", pair_config(""));
  const Result r = run_cli("pair --config " + p.string() + " --format jsonl");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "vdf.run/1");
  CHECK(j["regime"] == "near");
  CHECK(j["components"]["total"][2].get<double>() < 0.0);
  CHECK(j["total_N"][2].get<double>() < 0.0);
}

TEST_CASE("CLI strict mode rejects Gamma > |Delta|") {
  std::string text = pair_config("");
  text.replace(text.find("linewidth = 1.0e7"), 17, "linewidth = 5.0e13");
  const fs::path p = write_temp("wide.ini", text);
  CHECK(run_cli("pair --strict --config " + p.string()).status == 2);
  CHECK(run_cli("pair --config " + p.string()).status == 0);
}

TEST_CASE("CLI usage errors") {
  const fs::path p = write_temp("pair.ini", pair_config(""));
  CHECK(run_cli("verify --config " + p.string() + " --suite \"\"").status == 2);
  CHECK(run_cli("verify --config " + p.string() + " --suite bogus").status == 2);
  CHECK(run_cli("plate --config " + p.string()).status == 2);
  CHECK(run_cli("sweep --config " + p.string()).status == 2);
  CHECK(run_cli("pair --config /nonexistent.ini").status != 0);
  CHECK(run_cli("").status != 0);
}

TEST_CASE("CLI verify gradients and residues") {
  const fs::path p = write_temp("pair.ini", pair_config(""));
  const Result r = run_cli("verify --config " + p.string() + " --suite gradients,residues");
  CHECK(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["schema"] == "vdf.oracle/1");
    CHECK(j["passed"] == true);
    ++n;
  }
  CHECK(n == 4);
}

TEST_CASE("CLI near-field sweep follows R^-7") {
  const fs::path p = write_temp("near.ini", pair_config("[sweep]\nvariable = separation\ngrid = log\n"
                                                        "min = 1.5e-10\nmax = 1.5e-9\ncount = 8\n"));
  const Result r = run_cli("sweep --config " + p.string());
  CHECK(r.status == 0);
  const Csv c = parse_csv(r.out);
  REQUIRE(c.rows.size() == 8);
  std::vector<double> R, F;
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    R.push_back(c.num(i, "sweep_value"));
    F.push_back(std::abs(c.num(i, "total_z_N")));
  }
  CHECK(slope(R, F) == doctest::Approx(-7.0).epsilon(0.01 / 7.0));
}

TEST_CASE("CLI retarded plate sweep: Roentgen envelope follows 1/d") {
  const double kA = 2.0e15 / 299792458.0;
  auto envelope = [&](double d_red) {
    std::ostringstream cfg;
    cfg.precision(17);
    cfg << kAtoms << "\n[plate]\nheight = " << d_red / kA << "\ndensity = 1e16\nspeed = 100\n"
        << "[sweep]\nvariable = height\ngrid = linear\nmin = " << d_red / kA
        << "\nmax = " << (d_red + pi / 4) / kA << "\ncount = 2\n"
        << "[output]\ncomponents = roentgen_nc\n";
    const fs::path p = write_temp("plate.ini", cfg.str());
    const Result r = run_cli("sweep --config " + p.string());
    CHECK(r.status == 0);
    const Csv c = parse_csv(r.out);
    REQUIRE(c.rows.size() == 2);
    return std::hypot(c.num(0, "roentgen_nc_x"), c.num(1, "roentgen_nc_x"));
  };
  const double s = std::log(envelope(60.0) / envelope(30.0)) / std::log(2.0);
  CHECK(s == doctest::Approx(-1.0).epsilon(0.05));
}

TEST_CASE("CLI output is deterministic") {
  const fs::path p = write_temp("det.ini", pair_config("[sweep]\nvariable = separation\ngrid = log\n"
                                                       "min = 1e-9\nmax = 1e-6\ncount = 12\n"));
  const Result a = run_cli("sweep --config " + p.string());
  const Result b = run_cli("sweep --config " + p.string());
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const fs::path out = p.parent_path() / "det.csv";
  CHECK(run_cli("sweep --config " + p.string() + " --out " + out.string()).status == 0);
  std::ifstream is(out);
  const std::string file((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  CHECK(file == a.out);
}

TEST_CASE("library run keeps per-record errors") {
  RunConfig cfg = parse_config_string(pair_config("[sweep]\nvariable = rho\ngrid = linear\n"
                                                  "min = 0.99\nmax = 1.01\ncount = 3\n"));
  const auto recs = run(cfg, 2);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].error.empty());
  CHECK_FALSE(recs[1].error.empty());
  CHECK(recs[2].error.empty());
  CHECK(recs[2].rho == doctest::Approx(1.01));
}
