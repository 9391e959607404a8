#pragma once

#include <optional>

#include "ippp/types.hpp"

namespace ippp {

// Per-outer-iteration parameter values.
struct ScheduleValues {
  double gamma = 0.0;    // proximal weight gamma_k
  double beta = 0.0;     // penalty weight beta_k
  double eps_hat = 0.0;  // inner tolerance eps_hat_k
};

// Parameter schedules for the outer loop, k = 0, 1, 2, ...
//
//   ConvexSqrt        gamma_k = gamma           beta_k = beta sqrt(k+1)
//                     eps_hat_k = 1 / (beta_k (k+1))
//   NonconvexCbrt     beta_k = beta (k+1)^{1/3}
//                     gamma_k = 2 (rho0 + beta_k rho_c)   [rho form]
//                             = gamma (k+1)^{1/3}          [gamma form]
//                     eps_hat_k = 1 / (beta (k+1)^{4/3})
//   ConstantFeasible  beta_k = beta
//                     gamma_k = 2 (rho0 + beta rho_c)      [rho form]
//                             = gamma                      [gamma form]
//                     eps_hat_k = 1 / (k+1)^2
//
// rho0 is the weak-convexity modulus of the objective, rho_c the aggregated
// weak-convexity/bound product of the constraints. eps_hat_k is floored at
// 1e-12 so late iterations never demand sub-machine inner accuracy.
class Schedule {
 public:
  enum class Variant { ConvexSqrt, NonconvexCbrt, ConstantFeasible };

  static Schedule convex_sqrt(double gamma, double beta,
                              std::optional<double> rho0 = {});
  static Schedule nonconvex_cbrt(double beta, double rho0, double rho_c);
  static Schedule nonconvex_cbrt_gamma(double beta, double gamma);
  static Schedule constant_feasible(double beta, double rho0, double rho_c);
  static Schedule constant_feasible_gamma(double beta, double gamma);

  ScheduleValues at(long k) const;

  Variant variant() const { return variant_; }
  double beta_coeff() const { return beta_; }
  std::optional<double> gamma_coeff() const { return gamma_; }
  std::optional<double> rho0() const { return rho0_; }
  std::optional<double> rho_c() const { return rho_c_; }

 private:
  Schedule() = default;

  Variant variant_ = Variant::ConvexSqrt;
  double beta_ = 1.0;
  std::optional<double> gamma_;
  std::optional<double> rho0_;
  std::optional<double> rho_c_;
};

}  // namespace ippp
