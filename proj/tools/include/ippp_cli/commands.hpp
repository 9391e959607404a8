#pragma once

#include <string>
#include <vector>

#include "ippp_cli/config.hpp"

namespace ippp_cli {

// Runs the outer solver on the configured instance, writes the trace CSV and
// the certificate block. Exit 0 on certified success, 2 when an iteration or
// step budget ran out first, 1 on configuration errors.
int cmd_solve(const ConfigMap& cfg);

// Certifies a candidate point from a `x = ...` / `lambda = ...` / `y = ...`
// file against the configured instance at its eps. Exit 0 when fully
// eps-stationary, 3 when only the weak conditions hold, 4 otherwise, 1 on
// configuration or dimension errors.
int cmd_check(const ConfigMap& cfg, const std::string& point_path);

struct BenchPaths {
  std::string summary = "summary.csv";
  std::string svg = "bench.svg";
};

// Runs every config, writes one trace per run plus a summary CSV and a
// three-panel SVG (objective, infeasibility, stationarity against cumulative
// proximal steps). Exit 0 when all runs complete, 2 when any fails, 1 for an
// empty config set.
int cmd_bench(std::vector<ConfigMap> configs, const BenchPaths& paths,
              int jobs);

}  // namespace ippp_cli
