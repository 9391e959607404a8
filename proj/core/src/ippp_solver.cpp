#include "ippp/ippp_solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ippp {

namespace {

// rho falls back to L: an L-smooth function is L-weakly convex.
std::optional<double> weak_convexity_of(const SmoothOracle& o) {
  if (o.meta().weak_convexity) return o.meta().weak_convexity;
  return o.meta().smoothness;
}

// Aggregated constraint constant rho_c = sum_i rho_i B_i + sum_j sigma_j B_j.
std::optional<double> aggregate_rho_c(const ConstrainedProblem& p) {
  double s = 0.0;
  for (const auto& list : {p.ineq, p.eq}) {
    for (const auto& g : list) {
      const auto rho = weak_convexity_of(g);
      const auto B = g.meta().value_grad_bound;
      if (!rho || !B) return std::nullopt;
      s += *rho * *B;
    }
  }
  return s;
}

std::optional<double> aggregate_smoothness(const ConstrainedProblem& p,
                                           double gamma, double beta) {
  const auto L0 = p.f0.meta().smoothness;
  if (!L0) return std::nullopt;
  double s = 0.0;
  for (const auto& list : {p.ineq, p.eq}) {
    for (const auto& g : list) {
      const auto B = g.meta().value_grad_bound;
      const auto L = g.meta().smoothness;
      if (!B || !L) return std::nullopt;
      s += *B * (*B + *L);
    }
  }
  return *L0 + gamma + beta * s;
}

}  // namespace

CompositeSubproblem make_subproblem(const ConstrainedProblem& problem,
                                    const Vector& x_bar, double gamma,
                                    double beta) {
  if (x_bar.size() != problem.dim())
    throw std::invalid_argument("make_subproblem: center dimension mismatch");
  if (!(gamma > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("make_subproblem: gamma and beta must be > 0");

  CompositeSubproblem sub;
  sub.r = problem.reg;

  auto vg = [&problem, x_bar, gamma,
             beta](const Vector& x) -> std::pair<double, Vector> {
    auto [val, grad] = problem.f0.value_and_grad(x);
    const Vector d = x - x_bar;
    val += 0.5 * gamma * d.squaredNorm();
    grad += gamma * d;
    for (const auto& c : problem.eq) {
      auto [cv, cg] = c.value_and_grad(x);
      val += 0.5 * beta * cv * cv;
      grad += beta * cv * cg;
    }
    for (const auto& f : problem.ineq) {
      auto [fv, fg] = f.value_and_grad(x);
      if (fv > 0.0) {
        val += 0.5 * beta * fv * fv;
        grad += beta * fv * fg;
      }
    }
    return {val, std::move(grad)};
  };

  OracleMeta meta;
  meta.smoothness = aggregate_smoothness(problem, gamma, beta);
  sub.phi = SmoothOracle::fused(std::move(vg), meta);

  const auto rho0 = weak_convexity_of(problem.f0);
  const auto rho_c = aggregate_rho_c(problem);
  if (rho0 && rho_c) {
    const double mu = gamma - (*rho0 + beta * *rho_c);
    if (mu > 0.0) sub.strong_convexity = mu;
  }
  return sub;
}

std::optional<double> problem_rho0(const ConstrainedProblem& problem) {
  return weak_convexity_of(problem.f0);
}

std::optional<double> problem_rho_c(const ConstrainedProblem& problem) {
  return aggregate_rho_c(problem);
}

std::pair<StationarityReport, Multipliers> metrics(
    const ConstrainedProblem& problem, const Vector& x, double beta) {
  if (x.size() != problem.dim())
    throw std::invalid_argument("metrics: dimension mismatch");
  if (!(beta > 0.0)) throw std::invalid_argument("metrics: beta must be > 0");

  Multipliers mult;
  mult.lambda.resize(static_cast<Eigen::Index>(problem.ineq.size()));
  mult.y.resize(static_cast<Eigen::Index>(problem.eq.size()));

  Vector v = problem.f0.grad(x);
  double feas_sq = 0.0;
  double comp = 0.0;
  for (std::size_t j = 0; j < problem.eq.size(); ++j) {
    auto [cv, cg] = problem.eq[j].value_and_grad(x);
    mult.y[static_cast<Eigen::Index>(j)] = beta * cv;
    v += beta * cv * cg;
    feas_sq += cv * cv;
  }
  for (std::size_t i = 0; i < problem.ineq.size(); ++i) {
    auto [fv, fg] = problem.ineq[i].value_and_grad(x);
    const double plus = std::max(fv, 0.0);
    const double lam = beta * plus;
    mult.lambda[static_cast<Eigen::Index>(i)] = lam;
    if (lam > 0.0) v += lam * fg;
    feas_sq += plus * plus;
    comp += std::abs(lam * fv);
  }

  StationarityReport rep;
  rep.S = problem.reg.dist_to_neg_subdiff(x, v);
  rep.F = std::sqrt(feas_sq);
  rep.C = comp;
  return {rep, mult};
}

IpppResult ippp_solve(const ConstrainedProblem& problem,
                      const Schedule& schedule, const Vector& x0,
                      const IpppOptions& options) {
  if (x0.size() != problem.dim())
    throw std::invalid_argument("ippp_solve: x0 dimension mismatch");
  if (!problem.reg.domain().contains(x0))
    throw std::invalid_argument("ippp_solve: x0 lies outside the domain");
  if (!(options.eps > 0.0))
    throw std::invalid_argument("ippp_solve: eps must be > 0");
  if (options.max_outer_iterations < 0)
    throw std::invalid_argument("ippp_solve: negative iteration cap");

  // ConvexSqrt needs gamma to dominate the objective's weak convexity; when
  // the problem declares rho0, validate even if the schedule did not.
  if (schedule.variant() == Schedule::Variant::ConvexSqrt) {
    const auto rho0 = problem.f0.meta().weak_convexity;
    const double gamma = *schedule.gamma_coeff();
    if (rho0 && !(gamma > *rho0))
      throw std::invalid_argument(
          "ippp_solve: schedule requires gamma > rho0; got gamma = " +
          std::to_string(gamma) + ", rho0 = " + std::to_string(*rho0));
  }

  IpppResult out;
  out.trace.option = options.option;
  out.x = x0;
  out.multipliers.lambda = Vector::Zero(static_cast<Eigen::Index>(problem.ineq.size()));
  out.multipliers.y = Vector::Zero(static_cast<Eigen::Index>(problem.eq.size()));

  Vector x_bar = x0;
  double M_hat = options.inner.L_ini;
  double mu_hat = options.inner.mu0;
  double best_metric = std::numeric_limits<double>::infinity();
  const bool use_C = options.option == RIndexOption::OptionI;

  for (long k = 0; k < options.max_outer_iterations; ++k) {
    const ScheduleValues vals = schedule.at(k);

    std::int64_t call_budget = options.inner.max_prox_steps;
    if (options.max_total_prox_steps >= 0) {
      const std::int64_t remaining =
          options.max_total_prox_steps - out.total_prox_steps;
      if (remaining <= 0) {
        out.status = SolveStatus::StepLimit;
        return out;
      }
      call_budget = std::min(call_budget, remaining);
    }

    CompositeSubproblem sub =
        make_subproblem(problem, x_bar, vals.gamma, vals.beta);
    AdapConfig inner = options.inner;
    inner.L_ini = M_hat;
    inner.mu0 = mu_hat;
    if (options.raise_warm_mu && sub.strong_convexity &&
        *sub.strong_convexity > inner.mu0)
      inner.mu0 = *sub.strong_convexity;
    inner.eps_hat = vals.eps_hat;
    inner.max_prox_steps = call_budget;

    const auto t0 = std::chrono::steady_clock::now();
    const AdapResult res = adapapg_solve(sub, x_bar, inner);
    const auto t1 = std::chrono::steady_clock::now();

    out.total_prox_steps += res.prox_steps;
    if (res.M_hat > 0.0) M_hat = res.M_hat;
    mu_hat = res.mu_hat;

    const auto [rep, mult] = metrics(problem, res.x_hat, vals.beta);

    OuterRecord row;
    row.k = k;
    row.gamma = vals.gamma;
    row.beta = vals.beta;
    row.eps_hat = vals.eps_hat;
    row.objective = problem.f0.value(res.x_hat) +
                    (problem.reg.l1_weight() > 0.0
                         ? problem.reg.l1_weight() * res.x_hat.lpNorm<1>()
                         : 0.0);
    row.S = rep.S;
    row.F = rep.F;
    row.C = rep.C;
    row.inner_steps = res.prox_steps;
    row.cum_steps = out.total_prox_steps;
    row.inner_budget_exhausted = res.budget_exhausted;
    if (options.measure_time)
      row.wall_ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.trace.rows.push_back(row);

    const double metric = use_C ? std::max({rep.S, rep.F, rep.C})
                                : std::max(rep.S, rep.F);
    if (metric < best_metric) {
      best_metric = metric;
      out.trace.selected = k + 1;
      out.x = res.x_hat;
      out.multipliers = mult;
      out.report = rep;
    }

    if (options.observer) {
      OuterContext ctx{k, x_bar, res.x_hat, sub, vals, out.trace.rows.back()};
      options.observer(ctx);
    }

    x_bar = res.x_hat;
    out.outer_iterations = k + 1;

    if (best_metric <= options.eps) {
      out.status = SolveStatus::Converged;
      return out;
    }
    if (options.max_total_prox_steps >= 0 &&
        out.total_prox_steps >= options.max_total_prox_steps) {
      out.status = SolveStatus::StepLimit;
      return out;
    }
  }
  out.status = SolveStatus::IterationLimit;
  return out;
}

}  // namespace ippp
