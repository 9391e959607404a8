// End-to-end acceptance scenarios for the solver stack. Each scenario is
// self-contained, prints exactly one line
//   criterion NN: PASS|FAIL (measured quantities)
// and the process exits nonzero when any requested scenario fails. Run with
// no arguments for the full set or pass scenario numbers for a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ippp/adapapg.hpp"
#include "ippp/domain.hpp"
#include "ippp/ippp_solver.hpp"
#include "ippp/libsvm.hpp"
#include "ippp/mnpc.hpp"
#include "ippp/nnls.hpp"
#include "ippp/problem.hpp"
#include "ippp/regularizer.hpp"
#include "ippp/rng.hpp"
#include "ippp/schedule.hpp"
#include "ippp/smooth_oracle.hpp"
#include "ippp/stationarity.hpp"
#include "ippp/synthetic.hpp"
#include "ippp/theory_budget.hpp"
#include "ippp/trace_io.hpp"
#include "test_util.hpp"

namespace {

using ippp::Matrix;
using ippp::Rng;
using ippp::Vector;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return std::string(buf);
}

Vector random_unit(Rng& rng, int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.normal();
  const double n = v.norm();
  return n > 0 ? Vector(v / n) : Vector(Vector::Unit(dim, 0));
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2 share a pool of strongly convex quadratic subproblems.

struct InnerSuiteStats {
  double max_omega = 0.0;
  double max_dist = 0.0;
  long probes = 0;
  long violations = 0;
  double worst_margin = -1.0;  // max over probes of lhs - rhs of the bound
  double elapsed = 0.0;
};

InnerSuiteStats run_inner_suite(bool check_descent_bound) {
  const auto t0 = std::chrono::steady_clock::now();
  InnerSuiteStats stats;
  Rng rng(20240);
  for (int i = 0; i < 50; ++i) {
    const int dim = 2 + static_cast<int>(rng.index(19));
    const double mu = rng.uniform(0.5, 1.5);
    const double L = rng.uniform(5.0, 15.0);
    test_util::QuadraticData q = test_util::random_quadratic(rng, dim, mu, L);

    ippp::DomainSet domain = ippp::DomainSet::ball(dim, 1.0);
    if (i % 2 == 1) {
      Vector lo(dim), hi(dim);
      for (int j = 0; j < dim; ++j) {
        lo[j] = rng.uniform(-2.0, -0.1);
        hi[j] = rng.uniform(0.1, 2.0);
      }
      domain = ippp::DomainSet::box(lo, hi);
    } else {
      domain = ippp::DomainSet::ball(dim, rng.uniform(0.5, 2.0));
    }

    ippp::CompositeSubproblem sub;
    sub.phi = test_util::quadratic_oracle(q);
    sub.r = ippp::Regularizer::indicator(domain);
    if (i % 2 == 0) sub.strong_convexity = mu;

    ippp::AdapConfig cfg;
    cfg.eps_hat = 1e-8;
    if (check_descent_bound) {
      cfg.probe_observer = [&](const Vector& w, double probe_L,
                               const Vector& T) {
        const Vector g = probe_L * (w - T);
        const double moved = (T - w).norm();
        const double S =
            moved > 0 ? (sub.phi.grad(T) - sub.phi.grad(w)).norm() / moved
                      : 0.0;
        const double lhs = ippp::omega(sub.phi, sub.r, T);
        const double rhs = (1.0 + S / probe_L) * g.norm() + 1e-10;
        ++stats.probes;
        stats.worst_margin = std::max(stats.worst_margin, lhs - rhs);
        if (lhs > rhs) ++stats.violations;
      };
    }

    const Vector x_ini = Vector::Zero(dim);
    const ippp::AdapResult res = ippp::adapapg_solve(sub, x_ini, cfg);
    const double om = ippp::omega(sub.phi, sub.r, res.x_hat);
    const Vector x_ref =
        test_util::prox_gradient_oracle(sub.phi, sub.r, x_ini, q.L, 1000000);
    stats.max_omega = std::max(stats.max_omega, om);
    stats.max_dist = std::max(stats.max_dist, (res.x_hat - x_ref).norm());
  }
  stats.elapsed = seconds_since(t0);
  return stats;
}

Outcome criterion_01() {
  const InnerSuiteStats s = run_inner_suite(false);
  const bool pass =
      s.max_omega <= 1e-8 && s.max_dist <= 1e-5 && s.elapsed <= 30.0;
  return {pass, fmt("max omega %.3g (<= 1e-8), max dist to reference %.3g "
                    "(<= 1e-5), %.1f s (<= 30)",
                    s.max_omega, s.max_dist, s.elapsed)};
}

Outcome criterion_02() {
  const InnerSuiteStats s = run_inner_suite(true);
  const bool pass = s.probes > 0 && s.violations == 0;
  return {pass, fmt("%ld violations over %ld probes, worst margin %.3g",
                    s.violations, s.probes, s.worst_margin)};
}

// ---------------------------------------------------------------------------
// Criteria 3 and 5 share the 1-d KKT reproduction run.

ippp::IpppResult run_qp1d_repro(
    const std::function<void(const ippp::OuterContext&)>& observer) {
  const ippp::SyntheticInstance inst = ippp::qp1d();
  ippp::IpppOptions opt;
  opt.option = ippp::RIndexOption::OptionI;
  opt.eps = 1e-3;
  opt.max_outer_iterations = 5000;
  opt.measure_time = false;
  opt.observer = observer;
  Vector x0(1);
  x0 << 1.0;
  return ippp::ippp_solve(inst.problem,
                          ippp::Schedule::convex_sqrt(1.0, 1.0, 0.0), x0, opt);
}

Outcome criterion_03() {
  const auto t0 = std::chrono::steady_clock::now();
  const ippp::IpppResult res = run_qp1d_repro({});
  const double elapsed = seconds_since(t0);
  double best = std::numeric_limits<double>::infinity();
  for (const ippp::OuterRecord& row : res.trace.rows)
    best = std::min(best, std::max({row.S, row.F, row.C}));
  const double x_err = std::abs(res.x[0]);
  const double lam_err = std::abs(res.multipliers.lambda[0] - 2.0);
  const bool pass = best <= 1e-3 && x_err <= 1e-2 && lam_err <= 0.1 &&
                    elapsed <= 60.0;
  return {pass, fmt("best max{S,F,C} %.3g (target 1e-3) in %ld outers, "
                    "|x - 0| %.3g, |lambda - 2| %.3g, %.1f s",
                    best, res.outer_iterations, x_err, lam_err, elapsed)};
}

Outcome criterion_05() {
  const ippp::SyntheticInstance inst = ippp::qp1d();
  const double D = inst.problem.reg.domain().diameter();
  Rng rng(515);
  long probes = 0;
  long violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  const auto observer = [&](const ippp::OuterContext& ctx) {
    const double bound = ctx.values.eps_hat * D + 1e-8;
    const double attained = ctx.subproblem.phi.value(ctx.x_next) +
                            ctx.subproblem.r.value(ctx.x_next);
    for (int s = 0; s < 100; ++s) {
      const Vector x = ctx.subproblem.r.domain().sample_uniform(rng);
      const double gap =
          attained - ctx.subproblem.phi.value(x) - ctx.subproblem.r.value(x);
      ++probes;
      worst = std::max(worst, gap - bound);
      if (gap > bound) ++violations;
    }
  };
  run_qp1d_repro(observer);
  const bool pass = probes > 0 && violations == 0;
  return {pass, fmt("%ld violations over %ld near-optimality probes, "
                    "worst slack %.3g",
                    violations, probes, worst)};
}

Outcome criterion_04() {
  const ippp::SyntheticInstance inst = ippp::qp5d();
  ippp::IpppOptions opt;
  opt.option = ippp::RIndexOption::OptionI;
  opt.eps = 0.0;
  opt.max_outer_iterations = 800;
  opt.measure_time = false;
  const ippp::IpppResult res =
      ippp::ippp_solve(inst.problem, ippp::Schedule::convex_sqrt(1.0, 1.0, 0.0),
                       Vector::Zero(5), opt);
  const auto best_after = [&](long k) {
    double best = std::numeric_limits<double>::infinity();
    for (long i = 0; i < k && i < static_cast<long>(res.trace.rows.size()); ++i)
      best = std::min(best, std::max({res.trace.rows[i].S, res.trace.rows[i].F,
                                      res.trace.rows[i].C}));
    return best;
  };
  const double b50 = best_after(50);
  const double b200 = best_after(200);
  const double b800 = best_after(800);
  const bool pass = res.trace.rows.size() == 800 && b200 <= 0.7 * b50 &&
                    b800 <= 0.7 * b200;
  return {pass, fmt("best(50) %.3g, best(200) %.3g (ratio %.2f), best(800) "
                    "%.3g (ratio %.2f), ratios <= 0.7",
                    b50, b200, b200 / b50, b800, b800 / b200)};
}

Outcome criterion_06() {
  Rng rng(606);
  double worst = -std::numeric_limits<double>::infinity();
  int checks = 0;
  const auto check_problem = [&](const ippp::ConstrainedProblem& p) {
    for (const ippp::SmoothOracle& f : p.ineq) {
      const double rho = *f.meta().weak_convexity;
      const double B = *f.meta().value_grad_bound;
      for (const double beta : {2.0, 100.0}) {
        const auto h = [&](const Vector& x) {
          const double plus = std::max(f.value(x), 0.0);
          return 0.5 * beta * plus * plus +
                 0.5 * beta * rho * B * x.squaredNorm();
        };
        worst = std::max(worst, test_util::worst_midpoint_gap(
                                    h, p.reg.domain(), 1000, rng));
        ++checks;
      }
    }
  };

  ippp::Dataset ds = ippp::synthetic_gaussian_dataset(3, 16, 3, 7);
  ds = ippp::lift_features(ds, 1.0);
  check_problem(ippp::mnpc_build(ds, {1.0, 1.0}, 0.3));
  check_problem(ippp::weakly_convex_fixture().problem);

  const bool pass = checks == 6 && worst <= 1e-10;
  return {pass, fmt("worst midpoint-convexity gap %.3g over %d penalty "
                    "surrogates (slack 1e-10)",
                    worst, checks)};
}

Outcome criterion_07() {
  const auto t0 = std::chrono::steady_clock::now();
  const ippp::SyntheticInstance inst = ippp::weakly_convex_fixture();
  ippp::ConstantBudgetInputs in;
  in.B_f0 = *inst.problem.f0.meta().value_grad_bound;
  in.G = inst.problem.reg.value_bound();
  in.D = inst.problem.reg.domain().diameter();
  in.rho0 = inst.cert.rho0;
  in.rho_c = inst.cert.rho_c;
  in.eps = 0.05;
  const ippp::ConstantBudget budget = ippp::constant_budget(in);

  ippp::IpppOptions opt;
  opt.option = ippp::RIndexOption::OptionII;
  opt.eps = 0.05;
  opt.max_outer_iterations = 20000;
  opt.measure_time = false;
  const ippp::IpppResult res = ippp::ippp_solve(
      inst.problem,
      ippp::Schedule::constant_feasible(budget.beta, in.rho0, in.rho_c),
      Vector::Zero(inst.problem.dim()), opt);
  const double elapsed = seconds_since(t0);

  const ippp::KktReport rep =
      ippp::eps_stationary_check(inst.problem, res.x, res.multipliers, 0.05);
  const char* verdict =
      rep.verdict == ippp::KktVerdict::EpsStationary ? "eps_stationary"
      : rep.verdict == ippp::KktVerdict::WeakEpsStationary
          ? "weak_eps_stationary"
          : "not_stationary";
  const bool pass = rep.verdict != ippp::KktVerdict::NotStationary &&
                    res.outer_iterations <= 20000 && elapsed <= 300.0;
  return {pass, fmt("beta %.3g, verdict %s after %ld outers "
                    "(dual %.3g, primal %.3g), %.1f s (<= 300)",
                    budget.beta, verdict, res.outer_iterations,
                    rep.dual_residual, rep.primal_residual, elapsed)};
}

Outcome criterion_08() {
  ippp::Dataset ds = ippp::synthetic_gaussian_dataset(3, 100, 5, 42);
  ds = ippp::lift_features(ds, 1.0);
  const ippp::ConstrainedProblem problem =
      ippp::mnpc_build(ds, {1.0, 1.0}, 0.3);
  const Vector x0 = Vector::Zero(problem.dim());
  if (!ippp::verify_initial_feasibility(problem, x0, 1e-12))
    return {false, "origin start is not feasible"};
  const double measure0 = ippp::stationarity_measure(problem, x0);

  struct RunSummary {
    double infeas = 0.0;
    double ratio = 0.0;
    long outers = 0;
    std::int64_t steps = 0;
  };
  const auto run_setting = [&](const ippp::Schedule& sched) {
    ippp::IpppOptions opt;
    opt.option = ippp::RIndexOption::OptionI;
    opt.eps = 1e-9;
    opt.max_outer_iterations = 1000000;
    opt.max_total_prox_steps = 100000;
    opt.measure_time = false;
    const ippp::IpppResult res = ippp::ippp_solve(problem, sched, x0, opt);
    RunSummary s;
    for (const ippp::SmoothOracle& f : problem.ineq)
      s.infeas = std::max(s.infeas, std::max(f.value(res.x), 0.0));
    s.ratio = ippp::stationarity_measure(problem, res.x) / measure0;
    s.outers = res.outer_iterations;
    s.steps = res.total_prox_steps;
    return s;
  };

  const RunSummary cons =
      run_setting(ippp::Schedule::constant_feasible_gamma(1000.0, 0.1));
  const RunSummary grow =
      run_setting(ippp::Schedule::nonconvex_cbrt_gamma(200.0, 0.1));
  const bool pass = cons.infeas <= 1e-3 && cons.ratio <= 0.1 &&
                    grow.infeas <= 1e-3 && grow.ratio <= 0.1;
  return {pass,
          fmt("constant: infeas %.3g, measure ratio %.3g (%ld outers, %lld "
              "steps); growing: infeas %.3g, measure ratio %.3g (%ld outers, "
              "%lld steps)",
              cons.infeas, cons.ratio, cons.outers,
              static_cast<long long>(cons.steps), grow.infeas, grow.ratio,
              grow.outers, static_cast<long long>(grow.steps))};
}

// ---------------------------------------------------------------------------
// Criterion 9: reference-oracle agreement for the certification pipeline.

double enumerate_nnls_residual(const Matrix& A, const Vector& b) {
  double best = b.norm();  // the empty support
  const int n = static_cast<int>(A.cols());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (mask & (1 << j)) cols.push_back(j);
    Matrix S(A.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) S.col(j) = A.col(cols[j]);
    const Vector x = S.colPivHouseholderQr().solve(b);
    if ((x.array() < 0.0).any()) continue;
    best = std::min(best, (S * x - b).norm());
  }
  return best;
}

Outcome criterion_09() {
  Rng rng(909);

  double nnls_diff = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int rows = 1 + static_cast<int>(rng.index(6));
    const int cols = 1 + static_cast<int>(rng.index(5));
    Matrix A(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) A(i, j) = rng.normal();
    Vector b(rows);
    for (int i = 0; i < rows; ++i) b[i] = rng.normal();
    const ippp::NnlsResult res = ippp::nnls(A, b);
    nnls_diff = std::max(
        nnls_diff, std::abs(res.residual - enumerate_nnls_residual(A, b)));
  }

  double grid_diff = 0.0;
  double analytic_diff = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Vector a1 = random_unit(rng, 3);
    Vector a2;
    do {
      a2 = random_unit(rng, 3);
    } while (std::abs(a1.dot(a2)) > 0.7);
    Vector n;
    do {
      Vector raw = random_unit(rng, 3);
      n = raw - a1.dot(raw) * a1;
      const Vector u2 = (a2 - a1.dot(a2) * a1).normalized();
      n -= u2.dot(n) * u2;
    } while (n.norm() < 1e-3);
    n = 0.5 * n / n.norm();
    const double lam_star = rng.uniform(1.0, 4.0);
    const double y_star = rng.uniform(-4.0, 4.0);
    const bool with_eq = t % 2 == 0;
    const Vector g0 =
        -lam_star * a1 - (with_eq ? y_star : 0.0) * a2 + n;
    const Vector x_hat = 0.3 * random_unit(rng, 3);

    ippp::ConstrainedProblem p;
    p.f0 = ippp::SmoothOracle(
        [g0, x_hat](const Vector& x) { return g0.dot(x - x_hat); },
        [g0](const Vector&) { return g0; });
    p.ineq.push_back(ippp::SmoothOracle(
        [a1, x_hat](const Vector& x) { return a1.dot(x - x_hat); },
        [a1](const Vector&) { return a1; }));
    if (with_eq)
      p.eq.push_back(ippp::SmoothOracle(
          [a2, x_hat](const Vector& x) { return a2.dot(x - x_hat); },
          [a2](const Vector&) { return a2; }));
    p.reg = ippp::Regularizer::indicator(ippp::DomainSet::ball(3, 1000.0));

    const double fit = ippp::stationarity_measure(p, x_hat);
    analytic_diff = std::max(analytic_diff, std::abs(fit - 0.5));

    double grid = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10000; ++i) {
      const Vector v = g0 + (1e-3 * i) * a1;
      if (!with_eq) {
        grid = std::min(grid, v.norm());
        continue;
      }
      const double c0 = v.squaredNorm();
      const double c1 = 2.0 * v.dot(a2);
      for (int j = 0; j <= 20000; ++j) {
        const double y = -10.0 + 1e-3 * j;
        grid = std::min(grid, c0 + y * (c1 + y));
      }
    }
    if (with_eq) grid = std::sqrt(grid);
    grid_diff = std::max(grid_diff, std::abs(grid - fit));
  }

  double cone_diff = 0.0;
  for (int t = 0; t < 100; ++t) {
    ippp::DomainSet X = ippp::DomainSet::ball(1, 1.0);
    if (t % 2 == 0) {
      const int blocks = 1 + t % 3;
      std::vector<int> dims;
      std::vector<double> radii;
      for (int b = 0; b < blocks; ++b) {
        dims.push_back(1 + static_cast<int>(rng.index(3)));
        radii.push_back(rng.uniform(0.5, 2.0));
      }
      X = ippp::DomainSet::ball_product(dims, radii);
    } else {
      const int dim = 2 + static_cast<int>(rng.index(4));
      Vector lo(dim), hi(dim);
      for (int j = 0; j < dim; ++j) {
        lo[j] = rng.uniform(-2.0, -0.1);
        hi[j] = rng.uniform(0.1, 2.0);
      }
      X = ippp::DomainSet::box(lo, hi);
    }
    Vector x = X.sample_uniform(rng);
    if (t % 3 != 0) x = X.project(2.0 * x);  // push onto the boundary
    Vector v(X.dim());
    for (int j = 0; j < X.dim(); ++j) v[j] = rng.normal();
    const double mine = X.dist_to_neg_normal_cone(x, v);
    const double ref = test_util::cone_distance_pg(X.normal_cone_generators(x), v);
    cone_diff = std::max(cone_diff, std::abs(mine - ref));
  }

  const bool pass =
      nnls_diff <= 1e-8 && grid_diff <= 1e-3 && analytic_diff <= 1e-8 &&
      cone_diff <= 1e-6;
  return {pass, fmt("nnls vs enumeration %.3g (<= 1e-8), measure vs grid %.3g "
                    "(<= 1e-3), vs analytic %.3g, cone distance vs projected "
                    "gradient %.3g (<= 1e-6)",
                    nnls_diff, grid_diff, analytic_diff, cone_diff)};
}

Outcome criterion_10() {
  Rng rng(1010);
  double worst = 0.0;
  std::string worst_name = "none";
  int count = 0;
  const auto check = [&](const std::string& name, const ippp::SmoothOracle& h,
                         const ippp::DomainSet& X) {
    const double err =
        test_util::max_fd_error(h, test_util::sample_points(X, 100, rng));
    if (err > worst) {
      worst = err;
      worst_name = name;
    }
    ++count;
  };
  const auto check_problem = [&](const std::string& tag,
                                 const ippp::ConstrainedProblem& p) {
    const ippp::DomainSet& X = p.reg.domain();
    check(tag + ".objective", p.f0, X);
    for (std::size_t i = 0; i < p.ineq.size(); ++i)
      check(tag + ".ineq" + std::to_string(i), p.ineq[i], X);
    for (std::size_t j = 0; j < p.eq.size(); ++j)
      check(tag + ".eq" + std::to_string(j), p.eq[j], X);
  };

  const ippp::SyntheticInstance q1 = ippp::qp1d();
  const ippp::SyntheticInstance q5 = ippp::qp5d();
  const ippp::SyntheticInstance cqp =
      ippp::synthetic_build(ippp::SyntheticKind::ConvexQP, 4, 6);
  const ippp::SyntheticInstance wc = ippp::weakly_convex_fixture();
  ippp::Dataset ds = ippp::synthetic_gaussian_dataset(3, 16, 3, 7);
  ds = ippp::lift_features(ds, 1.0);
  const ippp::ConstrainedProblem np = ippp::mnpc_build(ds, {1.0, 1.0}, 0.3);

  check_problem("qp1d", q1.problem);
  check_problem("qp5d", q5.problem);
  check_problem("convexqp", cqp.problem);
  check_problem("weaklyconvex", wc.problem);
  check_problem("mnpc", np.problem);

  const auto composite = [&](const std::string& tag,
                             const ippp::ConstrainedProblem& p, double gamma,
                             double beta) {
    const Vector center = p.reg.domain().sample_uniform(rng);
    check(tag + ".penalty_composite",
          ippp::make_subproblem(p, center, gamma, beta).phi, p.reg.domain());
  };
  composite("qp5d", q5.problem, 1.7, 3.0);
  composite("weaklyconvex", wc.problem, 2.1, 5.0);
  composite("mnpc", np.problem, 0.3, 10.0);

  const bool pass = worst <= 1e-5;
  return {pass, fmt("worst relative gradient error %.3g (<= 1e-5) at %s over "
                    "%d oracles x 100 points",
                    worst, worst_name.c_str(), count)};
}

Outcome criterion_11() {
  const auto solve_trace = []() {
    const ippp::SyntheticInstance inst =
        ippp::synthetic_build(ippp::SyntheticKind::ConvexQP, 2, 4);
    ippp::IpppOptions opt;
    opt.option = ippp::RIndexOption::OptionII;
    opt.eps = 1e-8;
    opt.max_outer_iterations = 200;
    opt.measure_time = false;
    const ippp::IpppResult res = ippp::ippp_solve(
        inst.problem, ippp::Schedule::convex_sqrt(1.0, 5.0, 0.0),
        Vector::Zero(4), opt);
    std::ostringstream os;
    ippp::write_trace(res.trace, os);
    return os.str();
  };
  const std::string first = solve_trace();
  const std::string second = solve_trace();
  const bool identical = first == second && !first.empty();

  struct BadCase {
    const char* text;
    const char* needle;
  };
  const BadCase cases[] = {
      {"x 1:0.5", "line 1: non-numeric label"},
      {"1 a:0.5", "line 1: non-numeric index"},
      {"1 1:zz", "line 1: non-numeric value"},
      {"1 1:", "line 1: non-numeric value"},
      {"1 0:2", "line 1: index 0 is not positive"},
      {"1 -3:2", "line 1: index -3 is not positive"},
      {"1 2:1 2:3", "line 1: non-increasing index 2 after 2"},
      {"1 3:1 2:5", "line 1: non-increasing index 2 after 3"},
      {"2.5 1:1", "line 1: non-numeric label"},
      {"1 1:1\n2 oops", "line 2: expected index:value"},
  };
  int rejected = 0;
  std::string parse_fail;
  for (const BadCase& c : cases) {
    std::istringstream in(c.text);
    try {
      ippp::parse_libsvm(in);
      parse_fail = fmt("'%s' was accepted", c.text);
    } catch (const std::runtime_error& e) {
      if (std::string(e.what()).find(c.needle) != std::string::npos)
        ++rejected;
      else
        parse_fail = fmt("'%s' raised '%s'", c.text, e.what());
    }
  }
  const int total = static_cast<int>(sizeof(cases) / sizeof(cases[0]));

  const std::string golden_header =
      "k,gamma,beta,eps_hat,objective,S,F,C,inner_steps,cum_steps,wall_ms";
  const bool header_ok = golden_header == ippp::kTraceHeader &&
                         first.rfind(golden_header + "\n", 0) == 0;

  const bool pass = identical && rejected == total && header_ok;
  std::string detail =
      fmt("repeat traces %s (%zu bytes), %d/%d malformed inputs rejected, "
          "header %s",
          identical ? "identical" : "DIFFER", first.size(), rejected, total,
          header_ok ? "matches golden" : "DIFFERS");
  if (!parse_fail.empty()) detail += "; " + parse_fail;
  return {pass, detail};
}

Outcome criterion_12() {
  Vector a(2);
  a << 1.0, 2.0;
  ippp::ConstrainedProblem single;
  single.f0 = ippp::SmoothOracle([](const Vector&) { return 0.0; },
                                 [](const Vector& x) {
                                   return Vector(Vector::Zero(x.size()));
                                 });
  single.eq.push_back(ippp::SmoothOracle(
      [a](const Vector& x) { return a.dot(x) - 0.1; },
      [a](const Vector&) { return a; }));
  single.reg = ippp::Regularizer::indicator(ippp::DomainSet::ball(2, 2.0));
  const ippp::NonsingularityEstimate est =
      ippp::estimate_nonsingularity(single, 10000, 7);
  const double target = std::sqrt(5.0);
  const bool single_ok = est.nu.has_value() &&
                         std::abs(*est.nu - target) <= 1e-6 &&
                         est.informative >= 9990 && est.samples == 10000;

  ippp::Dataset ds = ippp::synthetic_gaussian_dataset(2, 30, 3, 11);
  ds = ippp::lift_features(ds, 1.0);
  const ippp::ConstrainedProblem np = ippp::mnpc_build(ds, {0.5}, 0.3);
  const ippp::NonsingularityEstimate est2 =
      ippp::estimate_nonsingularity(np, 10000, 5);
  const bool mnpc_ok =
      est2.nu.has_value() && *est2.nu > 0.0 && est2.informative > 0;

  const bool pass = single_ok && mnpc_ok;
  return {pass,
          fmt("single affine |nu - sqrt(5)| %.3g over %ld informative samples; "
              "lifted two-class nu %.3g (%ld informative)",
              est.nu ? std::abs(*est.nu - target) : -1.0, est.informative,
              est2.nu ? *est2.nu : -1.0, est2.informative)};
}

Outcome run_criterion(int n) {
  switch (n) {
    case 1: return criterion_01();
    case 2: return criterion_02();
    case 3: return criterion_03();
    case 4: return criterion_04();
    case 5: return criterion_05();
    case 6: return criterion_06();
    case 7: return criterion_07();
    case 8: return criterion_08();
    case 9: return criterion_09();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12();
    default: return {false, "unknown criterion"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long n = std::strtol(argv[i], &end, 10);
    if (end == argv[i] || *end != '\0' || n < 1 || n > 12) {
      std::fprintf(stderr, "usage: %s [criterion numbers in 1..12]\n", argv[0]);
      return 2;
    }
    which.push_back(static_cast<int>(n));
  }
  if (which.empty())
    for (int n = 1; n <= 12; ++n) which.push_back(n);

  bool all_pass = true;
  for (int n : which) {
    const Outcome o = run_criterion(n);
    std::printf("criterion %02d: %s (%s)\n", n, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
