#include "ippp/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "ippp/nnls.hpp"
#include "ippp/rng.hpp"

namespace ippp {

namespace {

constexpr double kActiveTol = 1e-12;  // f_i(x) >= -kActiveTol counts as active
constexpr double kZeroLambda = 1e-12;
constexpr double kInformativeTol = 1e-9;

const char* verdict_name(KktVerdict v) {
  switch (v) {
    case KktVerdict::EpsStationary:
      return "eps_stationary";
    case KktVerdict::WeakEpsStationary:
      return "weak_eps_stationary";
    default:
      return "not_stationary";
  }
}

}  // namespace

KktReport eps_stationary_check(const ConstrainedProblem& problem,
                               const Vector& x, const Multipliers& mult,
                               double eps) {
  const auto m = static_cast<Eigen::Index>(problem.ineq.size());
  const auto p = static_cast<Eigen::Index>(problem.eq.size());
  if (mult.lambda.size() != m || mult.y.size() != p)
    throw std::invalid_argument("eps_stationary_check: multiplier sizes");

  KktReport rep;
  rep.eps = eps;

  Vector f = problem.eval_ineq(x);
  Vector c = problem.eval_eq(x);
  Vector v = problem.f0.grad(x);
  for (Eigen::Index i = 0; i < m; ++i)
    v += mult.lambda[i] * problem.ineq[static_cast<std::size_t>(i)].grad(x);
  for (Eigen::Index j = 0; j < p; ++j)
    v += mult.y[j] * problem.eq[static_cast<std::size_t>(j)].grad(x);

  rep.dual_residual = problem.reg.dist_to_neg_subdiff(x, v);
  rep.primal_residual =
      std::sqrt(c.squaredNorm() + f.cwiseMax(0.0).squaredNorm());
  rep.comp_residual = 0.0;
  for (Eigen::Index i = 0; i < m; ++i)
    rep.comp_residual += std::abs(mult.lambda[i] * f[i]);

  rep.lambda_nonneg = (m == 0) || (mult.lambda.minCoeff() >= 0.0);
  rep.active_set_valid = rep.lambda_nonneg;
  for (Eigen::Index i = 0; i < m; ++i) {
    // Strictly inactive constraints must carry a (numerically) zero
    // multiplier.
    if (f[i] < -kActiveTol && mult.lambda[i] > kZeroLambda)
      rep.active_set_valid = false;
  }

  bool weak = rep.lambda_nonneg && rep.dual_residual <= eps &&
              rep.primal_residual <= eps;
  bool full = weak && rep.comp_residual <= eps && rep.active_set_valid;
  rep.verdict = full    ? KktVerdict::EpsStationary
                : weak  ? KktVerdict::WeakEpsStationary
                        : KktVerdict::NotStationary;
  return rep;
}

std::string format_kkt_report(const KktReport& report) {
  char buf[128];
  std::string out;
  auto num = [&](const char* key, double value) {
    std::snprintf(buf, sizeof buf, "%s = %.12g\n", key, value);
    out += buf;
  };
  auto flag = [&](const char* key, bool value) {
    out += key;
    out += value ? " = true\n" : " = false\n";
  };
  num("eps", report.eps);
  num("dual_residual", report.dual_residual);
  num("primal_residual", report.primal_residual);
  num("comp_residual", report.comp_residual);
  flag("lambda_nonneg", report.lambda_nonneg);
  flag("active_set_valid", report.active_set_valid);
  out += "verdict = ";
  out += verdict_name(report.verdict);
  out += '\n';
  return out;
}

StationarityFit stationarity_fit(const ConstrainedProblem& problem,
                                 const Vector& x) {
  if (problem.reg.l1_weight() != 0.0)
    throw std::invalid_argument(
        "stationarity_fit: only indicator regularizers have a cone-generator "
        "form");
  if (!problem.reg.domain().contains(x))
    throw std::invalid_argument(
        "stationarity_fit: x lies outside the domain, the normal cone is "
        "empty there");
  const auto m = static_cast<Eigen::Index>(problem.ineq.size());
  const auto p = static_cast<Eigen::Index>(problem.eq.size());
  const Eigen::Index d = x.size();

  Vector f = problem.eval_ineq(x);
  std::vector<Eigen::Index> active;
  for (Eigen::Index i = 0; i < m; ++i)
    if (f[i] >= -kActiveTol) active.push_back(i);

  Matrix cone = problem.reg.domain().normal_cone_generators(x);
  const Eigen::Index n_cols =
      static_cast<Eigen::Index>(active.size()) + 2 * p + cone.cols();
  Matrix G(d, n_cols);
  Eigen::Index col = 0;
  for (Eigen::Index i : active)
    G.col(col++) = problem.ineq[static_cast<std::size_t>(i)].grad(x);
  for (Eigen::Index j = 0; j < p; ++j) {
    Vector gc = problem.eq[static_cast<std::size_t>(j)].grad(x);
    G.col(col++) = gc;
    G.col(col++) = -gc;
  }
  for (Eigen::Index r = 0; r < cone.cols(); ++r) G.col(col++) = cone.col(r);

  NnlsResult sol = nnls(G, -problem.f0.grad(x));

  StationarityFit fit;
  fit.value = sol.residual;
  fit.mult.lambda = Vector::Zero(m);
  fit.mult.y = Vector::Zero(p);
  col = 0;
  for (Eigen::Index i : active) fit.mult.lambda[i] = sol.x[col++];
  for (Eigen::Index j = 0; j < p; ++j) {
    fit.mult.y[j] = sol.x[col] - sol.x[col + 1];
    col += 2;
  }
  return fit;
}

double stationarity_measure(const ConstrainedProblem& problem,
                            const Vector& x) {
  return stationarity_fit(problem, x).value;
}

NonsingularityEstimate estimate_nonsingularity(const ConstrainedProblem& problem,
                                               long n_samples,
                                               std::uint64_t seed) {
  constexpr long kChunk = 1024;
  NonsingularityEstimate est;
  est.samples = n_samples;
  double best = std::numeric_limits<double>::infinity();

  const DomainSet& domain = problem.reg.domain();
  for (long start = 0; start < n_samples; start += kChunk) {
    const long chunk_index = start / kChunk;
    // One stream per chunk keeps the draw sequence independent of scheduling.
    Rng rng(seed + 0x9E3779B97F4A7C15ULL *
                       static_cast<std::uint64_t>(chunk_index + 1));
    const long stop = std::min(n_samples, start + kChunk);
    for (long s = start; s < stop; ++s) {
      Vector x = domain.sample_uniform(rng);
      Vector f = problem.eval_ineq(x).cwiseMax(0.0);
      Vector c = problem.eval_eq(x);
      double viol = std::sqrt(c.squaredNorm() + f.squaredNorm());
      if (viol <= kInformativeTol) continue;
      ++est.informative;
      Vector v = Vector::Zero(domain.dim());
      if (problem.ineq.size() > 0) v += problem.ineq_jacobian(x).transpose() * f;
      if (problem.eq.size() > 0) v += problem.eq_jacobian(x).transpose() * c;
      double ratio = domain.dist_to_neg_normal_cone(x, v) / viol;
      best = std::min(best, ratio);
    }
  }
  if (est.informative > 0) est.nu = best;
  return est;
}

}  // namespace ippp
