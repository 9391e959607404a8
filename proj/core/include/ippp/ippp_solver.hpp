#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ippp/adapapg.hpp"
#include "ippp/problem.hpp"
#include "ippp/schedule.hpp"

namespace ippp {

// Penalty-derived multiplier estimates: lambda_i = beta [f_i(x)]_+ for the
// inequality constraints, y_j = beta c_j(x) for the equalities.
struct Multipliers {
  Vector lambda;
  Vector y;
};

// S: dual-feasibility residual dist(grad f0 + J_f' lambda + J_c' y,
//    -subdiff r(x));
// F: primal residual sqrt(||c(x)||^2 + ||[f(x)]_+||^2);
// C: complementarity residual sum_i |lambda_i f_i(x)|.
struct StationarityReport {
  double S = 0.0;
  double F = 0.0;
  double C = 0.0;
};

struct OuterRecord {
  long k = 0;
  double gamma = 0.0, beta = 0.0, eps_hat = 0.0;
  double objective = 0.0;  // f0(x) + separable regularizer value
  double S = 0.0, F = 0.0, C = 0.0;
  std::int64_t inner_steps = 0;
  std::int64_t cum_steps = 0;
  double wall_ms = 0.0;
  bool inner_budget_exhausted = false;
};

// R-index selection rule: OptionI minimizes max{S,F,C} over recorded
// iterates, OptionII minimizes max{S,F}; ties resolve to the smallest index.
enum class RIndexOption { OptionI, OptionII };

// One row per outer iteration. `selected` is the 1-based iterate index R
// (row R-1); 0 when no iterations ran.
struct SolveTrace {
  std::vector<OuterRecord> rows;
  long selected = 0;
  RIndexOption option = RIndexOption::OptionI;
};

enum class SolveStatus {
  Converged,       // max-metric at the selected index reached eps
  IterationLimit,  // outer iteration cap hit first
  StepLimit,       // global proximal-step cap hit first
};

struct OuterContext {
  long k;
  const Vector& x_prev;
  const Vector& x_next;
  const CompositeSubproblem& subproblem;
  ScheduleValues values;
  const OuterRecord& record;
};

struct IpppOptions {
  RIndexOption option = RIndexOption::OptionI;
  double eps = 1e-3;
  long max_outer_iterations = 100000;
  // Cumulative proximal-step cap across all inner solves; < 0 disables.
  std::int64_t max_total_prox_steps = -1;
  AdapConfig inner;  // L_ini/mu0 seed iteration 0; eps_hat is overwritten
  // When the subproblem's strong convexity is computable and exceeds the
  // warm-started mu, restart the inner estimate from it.
  bool raise_warm_mu = true;
  bool measure_time = true;  // fill wall_ms from a monotonic clock
  std::function<void(const OuterContext&)> observer;
};

struct IpppResult {
  Vector x;  // selected iterate
  Multipliers multipliers;
  StationarityReport report;
  SolveTrace trace;
  SolveStatus status = SolveStatus::IterationLimit;
  long outer_iterations = 0;
  std::int64_t total_prox_steps = 0;
};

// Proximal-point penalty subproblem at center x_bar:
//   phi(x) = f0(x) + (gamma/2)||x - x_bar||^2
//          + (beta/2)(||c(x)||^2 + ||[f(x)]_+||^2),  r = problem.reg.
// Smoothness metadata is filled in as
//   L_phi = L_f0 + gamma + beta [sum_i B_i(B_i + L_i) + sum_j B_j(B_j + L_j)]
// and strong convexity as gamma - (rho0 + beta rho_c) when the constants
// are declared (weak convexity falls back to smoothness); both stay unset
// otherwise.
CompositeSubproblem make_subproblem(const ConstrainedProblem& problem,
                                    const Vector& x_bar, double gamma,
                                    double beta);

// Stationarity metrics and penalty multipliers at x under penalty beta.
std::pair<StationarityReport, Multipliers> metrics(
    const ConstrainedProblem& problem, const Vector& x, double beta);

// Weak convexity of f0 from declared metadata, falling back to the
// smoothness bound; empty when neither is declared.
std::optional<double> problem_rho0(const ConstrainedProblem& problem);

// Aggregated constraint curvature rho_c = sum_i rho_i B_i over both
// constraint lists; empty when any constraint lacks metadata.
std::optional<double> problem_rho_c(const ConstrainedProblem& problem);

IpppResult ippp_solve(const ConstrainedProblem& problem,
                      const Schedule& schedule, const Vector& x0,
                      const IpppOptions& options);

}  // namespace ippp
