#pragma once

#include <optional>

namespace ippp {

// Worst-case outer-iteration budgets for the three parameter schedules.
// All quantities are the analysis constants:
//   B_f0  bound on |f0| and ||grad f0|| over the domain
//   G     bound on the separable regularizer value over the domain
//   D     domain diameter
//   M     bound on the separable regularizer subgradient norm
//   rho0, rho_c   weak-convexity constants (objective / aggregated
//                 constraints)
//   nu    non-singularity constant of the constraint system.

// Square-root penalty growth on convex constraints. Multiplier bounds need
// a strictly feasible point: min_abs_f_feas = min_i |f_i(x_feas)|,
// dist_feas_boundary = dist(x_feas, boundary of the domain), max_B_fi =
// max_i B_{f_i}. lam_min/lam_max describe A A' for the affine equalities
// A x = b; leave lam_min at 0 when there are none (M_y is then 0).
struct ConvexBudgetInputs {
  double B_f0 = 0.0;
  double G = 0.0;
  double D = 0.0;
  double M = 0.0;
  double gamma = 1.0;
  double beta = 1.0;
  double eps = 1e-3;
  double min_abs_f_feas = 0.0;
  double dist_feas_boundary = 0.0;
  double max_B_fi = 0.0;
  double lam_min_AAt = 0.0;
  double lam_max_AAt = 0.0;
  double x0_eq_infeas_sq = 0.0;    // ||A x0 - b||^2
  double x0_ineq_infeas_sq = 0.0;  // ||[f(x0)]_+||^2
};

struct ConvexBudget {
  double Q = 0.0;         // D (B_f0 + gamma D + M)
  double M_lambda = 0.0;  // Q / min_abs_f_feas
  double M_y = 0.0;
  double C1 = 0.0;
  long K = 0;
};

ConvexBudget convex_budget(const ConvexBudgetInputs& in);

// Cube-root penalty growth under the non-singularity condition.
struct NonconvexBudgetInputs {
  double B_f0 = 0.0;
  double G = 0.0;
  double D = 0.0;
  double M = 0.0;
  double rho0 = 0.0;
  double rho_c = 0.0;
  double nu = 1.0;
  double beta = 1.0;
  double eps = 1e-3;
  double x0_eq_infeas_sq = 0.0;    // ||c(x0)||^2
  double x0_ineq_infeas_sq = 0.0;  // ||[f(x0)]_+||^2
};

struct NonconvexBudget {
  long K_prime = 0;  // range of the gamma_k^2 tail sum in C2
  double C2 = 0.0;
  double K3 = 0.0, K4 = 0.0, K5 = 0.0;
  long K = 0;
};

NonconvexBudget nonconvex_budget(const NonconvexBudgetInputs& in);

// Constant penalty from a feasible start; targets weak stationarity. When
// beta is not supplied it is set to the tuned value
// (36 (B_f0 + G) + 3 pi^2 D) / eps^2.
struct ConstantBudgetInputs {
  double B_f0 = 0.0;
  double G = 0.0;
  double D = 0.0;
  double rho0 = 0.0;
  double rho_c = 0.0;
  double eps = 1e-3;
  std::optional<double> beta;
};

struct ConstantBudget {
  double beta = 0.0;
  double C3 = 0.0;
  long K = 0;
};

ConstantBudget constant_budget(const ConstantBudgetInputs& in);

}  // namespace ippp
