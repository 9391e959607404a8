#pragma once

#include <ostream>
#include <string>

#include "ippp/ippp_solver.hpp"

namespace ippp {

inline constexpr const char* kTraceHeader =
    "k,gamma,beta,eps_hat,objective,S,F,C,inner_steps,cum_steps,wall_ms";

// CSV: header line, one row per outer iteration (doubles with 12 significant
// digits, counters as plain integers, '\n' endings), then the trailer
// `# R_K=<index> option=<I|II>`. An empty trace still gets header and
// trailer (R_K=0).
void write_trace(const SolveTrace& trace, std::ostream& out);

// Same, to a file; failures throw with the path in the message.
void write_trace_file(const SolveTrace& trace, const std::string& path);

}  // namespace ippp
