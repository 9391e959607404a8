#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ippp/regularizer.hpp"
#include "ippp/smooth_oracle.hpp"

namespace ippp {

// min  F(x) = phi(x) + r(x)  with phi smooth and (optionally) strongly
// convex, r a structured regularizer.
struct CompositeSubproblem {
  SmoothOracle phi;
  Regularizer r = Regularizer::indicator(DomainSet::ball(1, 1.0));
  // mu_phi when known; the solver adapts when absent.
  std::optional<double> strong_convexity;
};

struct AdapConfig {
  double L_min = 1e-8;      // lower bound for the curvature estimate
  double gamma_inc = 1.5;   // line-search growth factor, > 1
  double gamma_dec = 1.2;   // curvature relaxation between steps, >= 1
  double gamma_sc = 1.2;    // strong-convexity shrink factor, > 1
  double theta_sc = 0.5;    // restart threshold, in (0,1)
  double mu0 = 1.0;         // initial strong-convexity estimate
  double L_ini = 10.0;      // first line-search probe
  double eps_hat = 1e-8;    // target prox-gradient residual
  std::int64_t max_prox_steps = 1'000'000;

  // Called once per proximal gradient probe with (base point w, probe L,
  // T_L(w)). Probes of rejected L values are included.
  std::function<void(const Vector&, double, const Vector&)> probe_observer;
};

// One accepted line-search step.
//   x_next = T_M(base), p = M * (base - x_next), S = local Lipschitz
//   estimate at base, alpha = momentum weight (1 for the plain search).
struct StepResult {
  Vector x_next;
  Vector base;
  Vector p;
  double M = 0.0;
  double S = 0.0;
  double alpha = 1.0;
  int prox_steps_used = 0;
};

struct AdapResult {
  Vector x_hat;
  double M_hat = 0.0;
  double mu_hat = 0.0;
  std::int64_t prox_steps = 0;
  bool budget_exhausted = false;
  bool mu_floored = false;   // mu was clipped at 1e-12
  double omega_final = 0.0;  // residual at x_hat (stale if budget ran out)
};

// Thrown by the line searches when the probe budget runs out before an
// acceptance; adapapg_solve converts it into a flagged result.
struct ProxBudgetExceeded : std::runtime_error {
  ProxBudgetExceeded() : std::runtime_error("proximal step budget exhausted") {}
};

// psi_L(w; x) = phi(w) + <grad phi(w), x - w> + (L/2)||x - w||^2 + r(x).
double local_model(const SmoothOracle& phi, const Regularizer& r,
                   const Vector& w, const Vector& x, double L);

// One proximal gradient step from w:
//   T = prox_{r/L}(w - grad phi(w)/L),  g = L (w - T),
//   S = ||grad phi(T) - grad phi(w)|| / ||T - w||  (0 when T == w).
struct ProxGradStep {
  Vector T;
  Vector g;
  double S = 0.0;
};
ProxGradStep prox_grad_step(const SmoothOracle& phi, const Regularizer& r,
                            const Vector& w, double L);

// omega(x) = min over xi in subdiff r(x) of ||grad phi(x) + xi||.
double omega(const SmoothOracle& phi, const Regularizer& r, const Vector& x);

// Backtracking from L_t: probes L_t, L_t * gamma_inc, ... until
// F(T_L(x_t)) <= psi_L(x_t; T_L(x_t)). budget, when given, is decremented
// once per probe and ProxBudgetExceeded is thrown at zero.
StepResult line_search(const SmoothOracle& phi, const Regularizer& r,
                       const Vector& x_t, double L_t, const AdapConfig& cfg,
                       std::int64_t* budget = nullptr);

// Accelerated variant: each probe L also sets alpha = sqrt(mu/L) and the
// extrapolated base
//   w = x_t + [alpha (1 - alpha_prev)] / [alpha_prev (1 + alpha)] (x_t - x_tm1),
// then tests F(T_L(w)) <= psi_L(w; T_L(w)).
StepResult accel_line_search(const SmoothOracle& phi, const Regularizer& r,
                             const Vector& x_t, const Vector& x_tm1,
                             double L_t, double mu, double alpha_prev,
                             const AdapConfig& cfg,
                             std::int64_t* budget = nullptr);

// Accelerated proximal gradient with adaptive estimation of both the
// curvature and the strong-convexity modulus. Runs until
// omega(x) <= cfg.eps_hat or the probe budget is exhausted; in the latter
// case the iterate with the smallest observed residual is returned and
// flagged.
AdapResult adapapg_solve(const CompositeSubproblem& sub, const Vector& x_ini,
                         const AdapConfig& cfg);

}  // namespace ippp
