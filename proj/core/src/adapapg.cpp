#include "ippp/adapapg.hpp"

#include <cmath>
#include <limits>

namespace ippp {

namespace {

constexpr double kMuFloor = 1e-12;

void validate(const AdapConfig& cfg) {
  if (!(cfg.gamma_inc > 1.0))
    throw std::invalid_argument("AdapConfig: gamma_inc must be > 1");
  if (!(cfg.gamma_dec >= 1.0))
    throw std::invalid_argument("AdapConfig: gamma_dec must be >= 1");
  if (!(cfg.gamma_sc > 1.0))
    throw std::invalid_argument("AdapConfig: gamma_sc must be > 1");
  if (!(cfg.theta_sc > 0.0 && cfg.theta_sc < 1.0))
    throw std::invalid_argument("AdapConfig: theta_sc must be in (0,1)");
  if (!(cfg.mu0 > 0.0)) throw std::invalid_argument("AdapConfig: mu0 must be > 0");
  if (!(cfg.L_ini > 0.0))
    throw std::invalid_argument("AdapConfig: L_ini must be > 0");
  if (!(cfg.L_min > 0.0))
    throw std::invalid_argument("AdapConfig: L_min must be > 0");
  if (cfg.max_prox_steps <= 0)
    throw std::invalid_argument("AdapConfig: max_prox_steps must be positive");
}

void spend_probe(std::int64_t* budget) {
  if (budget == nullptr) return;
  if (*budget <= 0) throw ProxBudgetExceeded();
  --(*budget);
}

double subproblem_S(const SmoothOracle& phi, const Vector& w,
                    const Vector& grad_w, const Vector& T) {
  const double dn = (T - w).norm();
  if (dn == 0.0) return 0.0;
  return (phi.grad(T) - grad_w).norm() / dn;
}

}  // namespace

double local_model(const SmoothOracle& phi, const Regularizer& r,
                   const Vector& w, const Vector& x, double L) {
  const double rx = r.value(x);
  if (std::isinf(rx)) return rx;
  const auto [fw, gw] = phi.value_and_grad(w);
  const Vector d = x - w;
  return fw + gw.dot(d) + 0.5 * L * d.squaredNorm() + rx;
}

ProxGradStep prox_grad_step(const SmoothOracle& phi, const Regularizer& r,
                            const Vector& w, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("prox_grad_step: L must be > 0");
  const Vector grad_w = phi.grad(w);
  ProxGradStep out;
  out.T = r.prox(w - grad_w / L, 1.0 / L);
  out.g = L * (w - out.T);
  out.S = subproblem_S(phi, w, grad_w, out.T);
  return out;
}

double omega(const SmoothOracle& phi, const Regularizer& r, const Vector& x) {
  return r.dist_to_neg_subdiff(x, phi.grad(x));
}

StepResult line_search(const SmoothOracle& phi, const Regularizer& r,
                       const Vector& x_t, double L_t, const AdapConfig& cfg,
                       std::int64_t* budget) {
  if (!(L_t > 0.0)) throw std::invalid_argument("line_search: L_t must be > 0");
  const auto [f_w, grad_w] = phi.value_and_grad(x_t);
  StepResult res;
  res.base = x_t;
  double L = L_t;  // first probe is exactly L_t, then grows by gamma_inc
  int probes = 0;
  for (;;) {
    spend_probe(budget);
    ++probes;
    Vector T = r.prox(x_t - grad_w / L, 1.0 / L);
    if (cfg.probe_observer) cfg.probe_observer(x_t, L, T);
    const Vector d = T - x_t;
    const double psi =
        f_w + grad_w.dot(d) + 0.5 * L * d.squaredNorm() + r.value(T);
    const double F_next = phi.value(T) + r.value(T);
    if (F_next <= psi) {
      res.x_next = std::move(T);
      res.M = L;
      break;
    }
    L *= cfg.gamma_inc;
    if (!std::isfinite(L))
      throw std::runtime_error("line_search: curvature estimate diverged");
  }
  res.p = res.M * (res.base - res.x_next);
  res.S = subproblem_S(phi, res.base, grad_w, res.x_next);
  res.alpha = 1.0;
  res.prox_steps_used = probes;
  return res;
}

StepResult accel_line_search(const SmoothOracle& phi, const Regularizer& r,
                             const Vector& x_t, const Vector& x_tm1,
                             double L_t, double mu, double alpha_prev,
                             const AdapConfig& cfg, std::int64_t* budget) {
  if (!(L_t > 0.0))
    throw std::invalid_argument("accel_line_search: L_t must be > 0");
  if (!(mu > 0.0))
    throw std::invalid_argument("accel_line_search: mu must be > 0");
  const Vector diff = x_t - x_tm1;
  double L = L_t;
  int probes = 0;
  for (;;) {
    spend_probe(budget);
    ++probes;
    const double alpha = std::sqrt(mu / L);
    const double coef = alpha * (1.0 - alpha_prev) / (alpha_prev * (1.0 + alpha));
    const Vector w = x_t + coef * diff;
    const auto [f_w, grad_w] = phi.value_and_grad(w);
    Vector T = r.prox(w - grad_w / L, 1.0 / L);
    if (cfg.probe_observer) cfg.probe_observer(w, L, T);
    const Vector d = T - w;
    const double psi =
        f_w + grad_w.dot(d) + 0.5 * L * d.squaredNorm() + r.value(T);
    const double F_next = phi.value(T) + r.value(T);
    if (F_next <= psi) {
      StepResult res;
      res.x_next = std::move(T);
      res.base = w;
      res.M = L;
      res.p = res.M * (res.base - res.x_next);
      res.S = subproblem_S(phi, res.base, grad_w, res.x_next);
      res.alpha = alpha;
      res.prox_steps_used = probes;
      return res;
    }
    L *= cfg.gamma_inc;
    if (!std::isfinite(L))
      throw std::runtime_error("accel_line_search: curvature estimate diverged");
  }
}

AdapResult adapapg_solve(const CompositeSubproblem& sub, const Vector& x_ini,
                         const AdapConfig& cfg) {
  validate(cfg);
  if (x_ini.size() != sub.r.domain().dim())
    throw std::invalid_argument("adapapg_solve: x_ini dimension mismatch");
  const SmoothOracle& phi = sub.phi;
  const Regularizer& r = sub.r;
  // The analysis requires L >= mu throughout; mu only decreases from mu0.
  const double L_min = std::max(cfg.L_min, cfg.mu0);
  std::int64_t budget = cfg.max_prox_steps;

  AdapResult out;
  out.mu_hat = cfg.mu0;

  StepResult init;
  try {
    init = line_search(phi, r, x_ini, cfg.L_ini, cfg, &budget);
  } catch (const ProxBudgetExceeded&) {
    out.x_hat = x_ini;
    out.prox_steps = cfg.max_prox_steps;
    out.budget_exhausted = true;
    out.omega_final = std::numeric_limits<double>::infinity();
    return out;
  }
  out.prox_steps = cfg.max_prox_steps - budget;

  // Epoch state: everything LineSearch seeded and the restarts refresh.
  Vector x_epoch = init.x_next;  // x^(0)
  double L_epoch = init.M;       // L_0
  double p_ini_norm = init.p.norm();
  double M_ini = init.M;
  double S_ini = init.S;

  if (p_ini_norm == 0.0) {
    // T(x^(0)) = x^(0): the starting point of the epoch is already optimal.
    out.x_hat = init.x_next;
    out.M_hat = init.M;
    out.omega_final = 0.0;
    return out;
  }

  double mu = cfg.mu0;
  // Loop state within an epoch.
  Vector x_t = x_epoch;
  Vector x_tm1 = x_epoch;
  double L_t = L_epoch;
  double alpha_prev = 1.0;
  double tau = 1.0;

  // Budget fallback: iterate with the smallest residual seen so far.
  double best_omega = std::numeric_limits<double>::infinity();
  Vector best_x = x_epoch;

  for (;;) {
    StepResult step;
    try {
      step = accel_line_search(phi, r, x_t, x_tm1, L_t, mu, alpha_prev, cfg,
                               &budget);
    } catch (const ProxBudgetExceeded&) {
      out.x_hat = best_x;
      out.prox_steps = cfg.max_prox_steps;
      out.budget_exhausted = true;
      out.omega_final = best_omega;
      out.mu_hat = mu;
      return out;
    }
    out.prox_steps = cfg.max_prox_steps - budget;
    const double tau_next = tau * (1.0 - step.alpha);

    const double w_res = omega(phi, r, step.x_next);
    if (w_res < best_omega) {
      best_omega = w_res;
      best_x = step.x_next;
    }

    if (step.p.norm() <= cfg.theta_sc * p_ini_norm) {
      // Geometric decrease observed: restart the epoch from the new point.
      x_epoch = step.x_next;
      L_epoch = step.M;
      p_ini_norm = step.p.norm();
      M_ini = step.M;
      S_ini = step.S;
      x_t = x_epoch;
      x_tm1 = x_epoch;
      L_t = L_epoch;
      alpha_prev = 1.0;
      tau = 1.0;
    } else if (2.0 * std::sqrt(2.0 * tau) * (step.M / mu) *
                   (1.0 + S_ini / M_ini) <=
               cfg.theta_sc) {
      // No decrease although the momentum window closed: mu was too big.
      // Rerun the epoch from x^(0) with a smaller mu.
      mu /= cfg.gamma_sc;
      if (mu < kMuFloor) {
        mu = kMuFloor;
        out.mu_floored = true;
      }
      x_t = x_epoch;
      x_tm1 = x_epoch;
      L_t = L_epoch;
      alpha_prev = 1.0;
      tau = 1.0;
    } else {
      L_t = std::max(L_min, step.M / cfg.gamma_dec);
      alpha_prev = step.alpha;
      tau = tau_next;
      x_tm1 = x_t;
      x_t = step.x_next;
    }

    if (w_res <= cfg.eps_hat) {
      out.x_hat = step.x_next;
      out.M_hat = step.M;
      out.mu_hat = mu;
      out.omega_final = w_res;
      return out;
    }
  }
}

}  // namespace ippp
