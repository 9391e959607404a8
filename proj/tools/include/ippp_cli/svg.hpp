#pragma once

#include <string>
#include <vector>

#include "ippp/ippp_solver.hpp"

namespace ippp_cli {

struct NamedTrace {
  std::string label;
  const ippp::SolveTrace* trace;
};

// Three stacked panels (objective linear, infeasibility and stationarity on
// log scale) against cumulative proximal steps, one polyline per run.
void write_benchmark_svg(const std::string& path,
                         const std::vector<NamedTrace>& runs);

}  // namespace ippp_cli
