#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ippp/ippp_solver.hpp"
#include "ippp/problem.hpp"
#include "ippp/schedule.hpp"

namespace ippp_cli {

// Flat `key = value` configuration; `#` starts a comment, arrays are comma
// lists. Later assignments win, which is how CLI flags override file keys.
using ConfigMap = std::map<std::string, std::string>;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ConfigMap parse_config_text(std::istream& in, const std::string& origin);
ConfigMap parse_config_file(const std::string& path);
void merge_config(ConfigMap& base, const ConfigMap& overrides);

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& key);

// Fully resolved run: exactly one problem, one schedule, solver options and
// output locations.
struct ResolvedRun {
  std::string name;
  ippp::ConstrainedProblem problem;
  ippp::Schedule schedule = ippp::Schedule::convex_sqrt(1.0, 1.0);
  ippp::IpppOptions options;
  ippp::Vector x0;
  std::string trace_path;
  std::string report_path;
};

// Instance-only resolution (problem + x0 + eps); used by the check command,
// which needs no schedule.
struct ResolvedProblem {
  std::string name;
  ippp::ConstrainedProblem problem;
  ippp::Vector x0;
  double eps = 1e-3;
};

ResolvedProblem resolve_problem(const ConfigMap& cfg);
ResolvedRun resolve_run(const ConfigMap& cfg);

// Candidate point file for the check command: keys `x` (required), `lambda`
// and `y` (optional multipliers, fitted when both are absent).
struct CandidatePoint {
  ippp::Vector x;
  std::optional<ippp::Vector> lambda;
  std::optional<ippp::Vector> y;
};

CandidatePoint parse_point_file(const std::string& path);

}  // namespace ippp_cli
