// Shared helpers for the test suites: finite-difference gradient probes,
// random strongly convex quadratics, and long-run first-order oracles used
// as independent references.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "ippp/adapapg.hpp"
#include "ippp/domain.hpp"
#include "ippp/regularizer.hpp"
#include "ippp/rng.hpp"
#include "ippp/smooth_oracle.hpp"
#include "ippp/types.hpp"

namespace test_util {

using ippp::Matrix;
using ippp::Rng;
using ippp::Vector;

// Worst relative error of the analytic gradient against central differences
// over `points`, with per-point step 1e-6 (1 + ||x||). The error is measured
// as ||fd - grad|| / max(1, ||grad||) so it stays meaningful near critical
// points.
inline double max_fd_error(const ippp::SmoothOracle& h,
                           const std::vector<Vector>& points) {
  double worst = 0.0;
  for (const Vector& x : points) {
    const double step = 1e-6 * (1.0 + x.norm());
    const Vector g = h.grad(x);
    Vector fd(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      Vector xp = x;
      Vector xm = x;
      xp[i] += step;
      xm[i] -= step;
      fd[i] = (h.value(xp) - h.value(xm)) / (2.0 * step);
    }
    const double denom = std::max(1.0, g.norm());
    worst = std::max(worst, (fd - g).norm() / denom);
  }
  return worst;
}

inline std::vector<Vector> sample_points(const ippp::DomainSet& domain, int n,
                                         Rng& rng) {
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back(domain.sample_uniform(rng));
  return pts;
}

// Dense quadratic 0.5 (x - c)' Q (x - c) with spectrum in [mu, L]. The
// unconstrained minimizer is c.
struct QuadraticData {
  Matrix Q;
  Vector c;
  double mu = 0.0;
  double L = 0.0;
};

inline QuadraticData random_quadratic(Rng& rng, Eigen::Index dim, double mu,
                                      double L) {
  Matrix raw(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) raw(i, j) = rng.normal();
  const Matrix V = Eigen::HouseholderQR<Matrix>(raw).householderQ();
  Vector eigs(dim);
  for (Eigen::Index i = 0; i < dim; ++i) eigs[i] = rng.uniform(mu, L);
  if (dim > 0) {
    eigs[0] = mu;
    eigs[dim - 1] = L;
  }
  QuadraticData q;
  q.Q = V * eigs.asDiagonal() * V.transpose();
  q.Q = 0.5 * (q.Q + q.Q.transpose().eval());
  q.c = Vector::Zero(dim);
  for (Eigen::Index i = 0; i < dim; ++i) q.c[i] = rng.normal();
  q.mu = mu;
  q.L = L;
  return q;
}

inline ippp::SmoothOracle quadratic_oracle(QuadraticData q) {
  ippp::OracleMeta meta;
  meta.smoothness = q.L;
  meta.weak_convexity = 0.0;
  return ippp::SmoothOracle::fused(
      [q = std::move(q)](const Vector& x) {
        Vector g = q.Q * (x - q.c);
        const double val = 0.5 * (x - q.c).dot(g);
        return std::make_pair(val, std::move(g));
      },
      meta);
}

// Long-run proximal gradient with fixed step 1/L, used as the reference
// solver for composite problems. Stops early once the displacement falls
// below 1e-16 (1 + ||x||); with strong convexity that leaves the iterate
// within a few ulps of the fixed point.
inline Vector prox_gradient_oracle(const ippp::SmoothOracle& phi,
                                   const ippp::Regularizer& r, Vector x,
                                   double L, long iters) {
  for (long t = 0; t < iters; ++t) {
    Vector next = r.prox(x - phi.grad(x) / L, 1.0 / L);
    const double moved = (next - x).norm();
    x = std::move(next);
    if (moved <= 1e-16 * (1.0 + x.norm())) break;
  }
  return x;
}

// Indicator of a box so wide it never binds in practice; stands in for an
// absent regularizer.
inline ippp::Regularizer free_box(Eigen::Index dim, double half_width = 1e6) {
  return ippp::Regularizer::indicator(
      ippp::DomainSet::box(Vector::Constant(dim, -half_width),
                           Vector::Constant(dim, half_width)));
}

// min over alpha >= 0 of ||v + G alpha|| by projected gradient on alpha.
// Generator sets produced by the domains here are near-orthogonal, so this
// converges linearly and the iteration cap is generous.
inline double cone_distance_pg(const Matrix& G, const Vector& v) {
  if (G.cols() == 0) return v.norm();
  Vector alpha = Vector::Zero(G.cols());
  const Matrix gram = G.transpose() * G;
  const Vector lin = G.transpose() * v;
  double step_scale = 1.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    step_scale = std::max(step_scale, gram.row(i).cwiseAbs().sum());
  const double step = 1.0 / step_scale;
  for (long t = 0; t < 300000; ++t) {
    Vector next = (alpha - step * (gram * alpha + lin)).cwiseMax(0.0);
    const double moved = (next - alpha).norm();
    alpha = std::move(next);
    if (moved <= 1e-15 * (1.0 + alpha.norm())) break;
  }
  return (v + G * alpha).norm();
}

// Largest midpoint-convexity violation of h over random segments inside X.
// Nonpositive (up to slack) certifies convexity along the sampled segments.
inline double worst_midpoint_gap(const std::function<double(const Vector&)>& h,
                                 const ippp::DomainSet& X, int segments,
                                 Rng& rng) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < segments; ++s) {
    const Vector a = X.sample_uniform(rng);
    const Vector b = X.sample_uniform(rng);
    const Vector m = 0.5 * (a + b);
    worst = std::max(worst, h(m) - 0.5 * (h(a) + h(b)));
  }
  return worst;
}

}  // namespace test_util
