#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ippp/ippp_solver.hpp"
#include "ippp/problem.hpp"
#include "ippp/types.hpp"

namespace ippp {

enum class KktVerdict { EpsStationary, WeakEpsStationary, NotStationary };

// Certificate for a candidate point with explicit multipliers.
struct KktReport {
  double eps = 0;
  double dual_residual = 0;   // dist(grad f0 + Jf^T lambda + Jc^T y, -subdiff g)
  double primal_residual = 0; // sqrt(||c||^2 + ||[f]_+||^2)
  double comp_residual = 0;   // sum_i |lambda_i f_i|
  bool lambda_nonneg = true;
  bool active_set_valid = true;  // additionally lambda_i = 0 off the active set
  KktVerdict verdict = KktVerdict::NotStationary;
};

KktReport eps_stationary_check(const ConstrainedProblem& problem,
                               const Vector& x, const Multipliers& mult,
                               double eps);

// Flat key=value rendering, one field per line.
std::string format_kkt_report(const KktReport& report);

struct StationarityFit {
  double value = 0;   // best achievable dual residual at x
  Multipliers mult;   // minimizing multipliers (lambda >= 0 on active set)
};

// Distance from -grad f0(x) to the cone spanned by active inequality
// gradients, equality gradients (both signs), and the normal cone of the
// domain at x. Inequalities with f_i(x) >= -1e-12 count as active. Only
// indicator regularizers are supported; a separable term has no generator
// representation here.
StationarityFit stationarity_fit(const ConstrainedProblem& problem,
                                 const Vector& x);
double stationarity_measure(const ConstrainedProblem& problem, const Vector& x);

struct NonsingularityEstimate {
  std::optional<double> nu;  // empty when no sample was informative
  long informative = 0;
  long samples = 0;
};

// Samples the domain uniformly and takes the minimum over infeasible points of
//   dist(Jc^T c + Jf^T [f]_+, -N_X(x)) / sqrt(||c||^2 + ||[f]_+||^2).
// Points with constraint norm <= 1e-9 are skipped. Sampling is split into
// fixed chunks of 1024 draws, each with its own seeded stream, so the result
// does not depend on how the chunks are scheduled.
NonsingularityEstimate estimate_nonsingularity(const ConstrainedProblem& problem,
                                               long n_samples,
                                               std::uint64_t seed);

}  // namespace ippp
