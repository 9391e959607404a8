#include "ippp/trace_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ippp {

void write_trace(const SolveTrace& trace, std::ostream& out) {
  out << kTraceHeader << '\n';
  char buf[320];
  for (const OuterRecord& r : trace.rows) {
    std::snprintf(buf, sizeof buf,
                  "%ld,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%" PRId64
                  ",%" PRId64 ",%.12g\n",
                  r.k, r.gamma, r.beta, r.eps_hat, r.objective, r.S, r.F, r.C,
                  r.inner_steps, r.cum_steps, r.wall_ms);
    out << buf;
  }
  out << "# R_K=" << trace.selected << " option="
      << (trace.option == RIndexOption::OptionI ? "I" : "II") << '\n';
}

void write_trace_file(const SolveTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);
  write_trace(trace, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing trace file: " + path);
}

}  // namespace ippp
