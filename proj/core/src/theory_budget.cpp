#include "ippp/theory_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace ippp {

namespace {

long ceil_to_long(double v) {
  if (!(v >= 0.0)) return 0;
  if (v > 9.0e18) throw std::overflow_error("theory budget: K overflows");
  return static_cast<long>(std::ceil(v));
}

}  // namespace

ConvexBudget convex_budget(const ConvexBudgetInputs& in) {
  if (!(in.beta > 0.0) || !(in.gamma > 0.0) || !(in.eps > 0.0))
    throw std::invalid_argument("convex_budget: beta, gamma, eps must be > 0");
  if (!(in.min_abs_f_feas > 0.0))
    throw std::invalid_argument(
        "convex_budget: needs a strictly feasible point (min_abs_f_feas > 0)");

  ConvexBudget out;
  out.Q = in.D * (in.B_f0 + in.gamma * in.D + in.M);
  out.M_lambda = out.Q / in.min_abs_f_feas;
  if (in.lam_min_AAt > 0.0) {
    if (!(in.dist_feas_boundary > 0.0))
      throw std::invalid_argument(
          "convex_budget: M_y needs dist_feas_boundary > 0");
    out.M_y = out.Q * std::sqrt(in.lam_max_AAt) / in.lam_min_AAt *
              (1.0 / in.D + 1.0 / in.dist_feas_boundary +
               in.max_B_fi / in.min_abs_f_feas);
  }
  const double msq = in.D + out.M_y * out.M_y + out.M_lambda * out.M_lambda;
  out.C1 = 2.0 * in.B_f0 + 2.0 * in.G +
           0.5 * in.beta * (in.x0_eq_infeas_sq + in.x0_ineq_infeas_sq) +
           (3.0 / in.beta) * (2.0 * in.D + out.M_y * out.M_y +
                              out.M_lambda * out.M_lambda);
  const double inner = std::sqrt(2.0 * in.gamma * out.C1) +
                       4.0 * std::sqrt(msq) / in.beta + 8.0 * msq / in.beta;
  out.K = ceil_to_long(std::max(6.0 / (in.beta * in.eps),
                                4.0 / (in.eps * in.eps) * inner * inner));
  return out;
}

NonconvexBudget nonconvex_budget(const NonconvexBudgetInputs& in) {
  if (!(in.beta > 0.0) || !(in.eps > 0.0) || !(in.nu > 0.0))
    throw std::invalid_argument("nonconvex_budget: beta, eps, nu must be > 0");
  if (in.rho0 < 0.0 || in.rho_c < 0.0)
    throw std::invalid_argument("nonconvex_budget: rho0, rho_c must be >= 0");

  NonconvexBudget out;
  const double nu2 = in.nu * in.nu;
  out.K_prime = ceil_to_long(std::max(
                    std::pow(32.0 * in.rho0 / (3.0 * nu2 * in.beta), 0.75),
                    32.0 * in.rho_c / (3.0 * nu2))) -
                1;

  const double bm = 1.0 / in.beta + in.B_f0 + in.M;
  double c2 = 4.0 * (2.0 * in.B_f0 + 2.0 * in.G +
                     0.5 * in.beta * (in.x0_eq_infeas_sq + in.x0_ineq_infeas_sq) +
                     8.0 / (3.0 * nu2 * in.beta) * bm * bm +
                     4.0 * in.D / in.beta);
  // Tail sum over the first K' iterations with gamma_k = 2 (rho0 +
  // beta_k rho_c), beta_k = beta (k+1)^{1/3}; every factor is known, so the
  // finite sum is evaluated directly.
  for (long k = 0; k < out.K_prime; ++k) {
    const double k1 = static_cast<double>(k) + 1.0;
    const double beta_k = in.beta * std::cbrt(k1);
    const double gamma_k = 2.0 * (in.rho0 + beta_k * in.rho_c);
    c2 += 8.0 * gamma_k * gamma_k * in.D * in.D /
          (3.0 * nu2 * in.beta * std::pow(k1, 4.0 / 3.0));
  }
  out.C2 = c2;

  out.K3 = 3.0 / in.eps *
           (4.0 / in.beta + 4.0 / (in.nu * in.beta * in.beta) +
            9.0 / (2.0 * nu2 * in.beta * in.beta * in.beta) +
            6.0 * out.C2 * (in.rho0 / in.beta + in.rho_c) / nu2);
  const double one_nb = 1.0 + 1.0 / (in.nu * in.beta);
  out.K4 = 18.0 * in.rho0 * out.C2 * one_nb * one_nb / (in.eps * in.eps);
  const double k5_base = one_nb * std::sqrt(2.0 * in.beta * in.rho_c * out.C2) +
                         (3.0 * in.B_f0 + 3.0 * in.M) / (2.0 * in.nu * in.beta) +
                         9.0 * (in.B_f0 + in.M) * (in.B_f0 + in.M) /
                             (2.0 * nu2 * in.beta);
  out.K5 = 27.0 / (in.eps * in.eps * in.eps) * k5_base * k5_base * k5_base;
  out.K = ceil_to_long(std::max({out.K3, out.K4, out.K5}));
  return out;
}

ConstantBudget constant_budget(const ConstantBudgetInputs& in) {
  if (!(in.eps > 0.0))
    throw std::invalid_argument("constant_budget: eps must be > 0");
  if (in.rho0 < 0.0 || in.rho_c < 0.0)
    throw std::invalid_argument("constant_budget: rho0, rho_c must be >= 0");
  const double pi2 = M_PI * M_PI;
  ConstantBudget out;
  out.beta = in.beta ? *in.beta
                     : (36.0 * (in.B_f0 + in.G) + 3.0 * pi2 * in.D) /
                           (in.eps * in.eps);
  out.C3 = (2.0 * in.rho0 + 2.0 * out.beta * in.rho_c) *
           (4.0 * (in.B_f0 + in.G) + pi2 * in.D / 3.0);
  out.K = ceil_to_long(
      std::max(9.0 * out.C3 / (in.eps * in.eps), pi2 / (2.0 * in.eps)));
  return out;
}

}  // namespace ippp
