#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "vdf/config.hpp"
#include "vdf/oracle.hpp"

namespace vdf {

inline constexpr const char *kRunSchema = "vdf.run/1";

struct Record {
  int index = 0;
  std::string geometry;  // "pair" or "plate"
  std::string sweep_variable;
  double sweep_value = 0.0;
  double x = 0.0;  // k_A R for a pair, k_A d for a plate
  double rho = 0.0;
  double beta_R = 0.0;
  double beta_perp = 0.0;
  double T_red = 0.0;
  std::string regime;
  ForceBreakdown force;  // reduced units
  Vec3d total_N;
  std::vector<std::string> warnings;
  std::string error;
};

std::string regime_label(double x);

// One record per sweep point (or a single record without a sweep). Points are evaluated
// concurrently; records come back in sweep order. Per-point errors are attached to the record.
std::vector<Record> run(const RunConfig &cfg, unsigned threads = 0);

const std::vector<std::string> &all_components();
void write_csv(std::ostream &os, const std::vector<Record> &recs, const std::vector<std::string> &components);
void write_jsonl(std::ostream &os, const std::vector<Record> &recs, const std::vector<std::string> &components);

const std::set<std::string> &known_suites();
// Throws ConfigError for an empty or unknown suite set.
std::vector<OracleReport> verify(const RunConfig &cfg, const std::set<std::string> &suites);

}  // namespace vdf
