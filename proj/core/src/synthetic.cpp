#include "ippp/synthetic.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ippp/rng.hpp"

namespace ippp {

namespace {

SmoothOracle quadratic_distance(Vector x0, double scale, OracleMeta meta) {
  auto body = [x0 = std::move(x0),
               scale](const Vector& x) -> std::pair<double, Vector> {
    Vector d = x - x0;
    return {0.5 * scale * d.squaredNorm(), scale * d};
  };
  return SmoothOracle::fused(std::move(body), meta);
}

SmoothOracle affine(Vector a, double b, OracleMeta meta) {
  auto body = [a = std::move(a),
               b](const Vector& x) -> std::pair<double, Vector> {
    return {a.dot(x) - b, a};
  };
  return SmoothOracle::fused(std::move(body), meta);
}

OracleMeta affine_meta(const Vector& a, double b, double radius) {
  OracleMeta meta;
  meta.smoothness = 0.0;
  meta.weak_convexity = 0.0;
  meta.value_grad_bound = std::max(a.norm() * radius + std::abs(b), a.norm());
  return meta;
}

OracleMeta quadratic_meta(const Vector& x0, double scale, double radius) {
  OracleMeta meta;
  meta.smoothness = scale;
  meta.weak_convexity = 0.0;
  const double reach = radius + x0.norm();
  meta.value_grad_bound =
      std::max(0.5 * scale * reach * reach, scale * reach);
  return meta;
}

SyntheticInstance build_convex_qp(std::uint64_t seed, int dim) {
  const double radius = 3.0;
  Rng rng(seed);

  // Certificate first: draw the KKT point and multipliers, then assemble the
  // data so stationarity holds exactly.
  Vector x_star = DomainSet::ball(dim, 1.5).sample_uniform(rng);
  const double lambda_star = 0.1 + 0.9 * rng.uniform();

  Vector a(dim);
  for (int i = 0; i < dim; ++i) a[i] = rng.normal();
  a *= (1.0 + rng.uniform()) / a.norm();
  const double b = a.dot(x_star);

  const bool has_eq = (seed % 2 == 0);
  Vector g;
  double h = 0.0, y_star = 0.0;
  if (has_eq) {
    g.resize(dim);
    for (int i = 0; i < dim; ++i) g[i] = rng.normal();
    g *= (1.0 + rng.uniform()) / g.norm();
    h = g.dot(x_star);
    y_star = -1.0 + 2.0 * rng.uniform();
  }

  Vector x0 = x_star + lambda_star * a;
  if (has_eq) x0 += y_star * g;

  SyntheticInstance inst;
  inst.problem.f0 = quadratic_distance(x0, 1.0, quadratic_meta(x0, 1.0, radius));
  inst.problem.ineq.push_back(affine(a, b, affine_meta(a, b, radius)));
  if (has_eq) inst.problem.eq.push_back(affine(g, h, affine_meta(g, h, radius)));
  inst.problem.reg = Regularizer::indicator(DomainSet::ball(dim, radius));

  inst.cert.x_star = std::move(x_star);
  inst.cert.mult.lambda = Vector::Constant(1, lambda_star);
  inst.cert.mult.y = has_eq ? Vector::Constant(1, y_star) : Vector(0);
  return inst;
}

SyntheticInstance build_weakly_convex(std::uint64_t seed, int dim) {
  const double radius = 0.25;
  const double c_sin = 0.05;
  const double s_shift = 0.005;
  Rng rng(seed);

  Matrix A = 0.6 * Matrix::Identity(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) A(i, j) += 0.06 * rng.uniform(-1.0, 1.0);
  Vector b(dim);
  for (int i = 0; i < dim; ++i) b[i] = 0.02 * rng.uniform(-1.0, 1.0);

  const double a_norm = std::sqrt(Eigen::SelfAdjointEigenSolver<Matrix>(
                                      A.transpose() * A)
                                      .eigenvalues()
                                      .maxCoeff());

  OracleMeta f0_meta;
  f0_meta.smoothness = a_norm * a_norm + c_sin;
  f0_meta.weak_convexity = c_sin;  // exact: the quadratic part is convex
  const double res_bound = a_norm * radius + b.norm();
  f0_meta.value_grad_bound =
      std::max(0.5 * res_bound * res_bound + c_sin * dim * std::min(1.0, radius),
               a_norm * res_bound + c_sin * std::sqrt(double(dim)));

  auto f0_body = [A, b, c_sin](const Vector& x) -> std::pair<double, Vector> {
    Vector r = A * x - b;
    double v = 0.5 * r.squaredNorm();
    Vector grad = A.transpose() * r;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      v += c_sin * std::sin(x[i]);
      grad[i] += c_sin * std::cos(x[i]);
    }
    return {v, grad};
  };

  // Indefinite diagonal: large positive entries alternating with a tiny
  // negative one, so the weak-convexity modulus is exactly 4e-4 and the
  // constraint crosses zero inside the ball.
  Vector p(dim);
  for (int i = 0; i < dim; ++i) p[i] = (i % 2 == 0) ? 0.2 : -2e-4;
  const double p_max = p.cwiseAbs().maxCoeff();
  const double p_neg = -std::min(0.0, p.minCoeff());

  OracleMeta f1_meta;
  f1_meta.smoothness = 2.0 * p_max;
  f1_meta.weak_convexity = 2.0 * p_neg;
  f1_meta.value_grad_bound =
      std::max(p_max * radius * radius + s_shift, 2.0 * p_max * radius);

  auto f1_body = [p, s_shift](const Vector& x) -> std::pair<double, Vector> {
    return {x.cwiseProduct(p).dot(x) - s_shift, 2.0 * p.cwiseProduct(x)};
  };

  SyntheticInstance inst;
  inst.problem.f0 = SmoothOracle::fused(std::move(f0_body), f0_meta);
  inst.problem.ineq.push_back(SmoothOracle::fused(std::move(f1_body), f1_meta));
  inst.problem.reg = Regularizer::indicator(DomainSet::ball(dim, radius));

  inst.cert.x_star = Vector::Zero(dim);
  inst.cert.mult.lambda = Vector::Zero(1);
  inst.cert.mult.y = Vector(0);
  inst.cert.rho0 = c_sin;
  inst.cert.rho_c = 2.0 * p_neg * *f1_meta.value_grad_bound;
  return inst;
}

}  // namespace

SyntheticInstance synthetic_build(SyntheticKind kind, std::uint64_t seed,
                                  int dim) {
  if (dim < 1 || dim > 50)
    throw std::invalid_argument("synthetic_build: dim must be in [1, 50]");
  return kind == SyntheticKind::ConvexQP ? build_convex_qp(seed, dim)
                                         : build_weakly_convex(seed, dim);
}

SyntheticInstance qp1d() {
  SyntheticInstance inst;
  Vector x0 = Vector::Constant(1, 1.0);
  OracleMeta f0_meta;
  f0_meta.smoothness = 2.0;
  f0_meta.weak_convexity = 0.0;
  f0_meta.value_grad_bound = 9.0;  // sup over [-2,2] of (x-1)^2 and |2(x-1)|
  inst.problem.f0 = quadratic_distance(x0, 2.0, f0_meta);

  Vector a = Vector::Constant(1, 1.0);
  inst.problem.ineq.push_back(affine(a, 0.0, affine_meta(a, 0.0, 2.0)));
  inst.problem.reg = Regularizer::indicator(
      DomainSet::box(Vector::Constant(1, -2.0), Vector::Constant(1, 2.0)));

  inst.cert.x_star = Vector::Zero(1);
  inst.cert.mult.lambda = Vector::Constant(1, 2.0);
  inst.cert.mult.y = Vector(0);
  return inst;
}

SyntheticInstance qp5d() {
  const double radius = 3.0;
  Vector x0 = Vector::Constant(5, 1.0);
  Vector a(5);
  a << 1.0, 2.0, 0.0, -1.0, 1.0;

  SyntheticInstance inst;
  inst.problem.f0 = quadratic_distance(x0, 1.0, quadratic_meta(x0, 1.0, radius));
  inst.problem.ineq.push_back(affine(a, 1.0, affine_meta(a, 1.0, radius)));
  inst.problem.reg = Regularizer::indicator(DomainSet::ball(5, radius));

  // Projection of x0 onto {a.x <= 1}: x* = x0 - ((a.x0 - 1)/||a||^2) a.
  inst.cert.x_star = x0 - (2.0 / 7.0) * a;
  inst.cert.mult.lambda = Vector::Constant(1, 2.0 / 7.0);
  inst.cert.mult.y = Vector(0);
  return inst;
}

SyntheticInstance weakly_convex_fixture() {
  return synthetic_build(SyntheticKind::WeaklyConvex, 0, 2);
}

bool verify_initial_feasibility(const ConstrainedProblem& p, const Vector& x0,
                                double tol) {
  if (!p.reg.domain().contains(x0)) return false;
  for (const SmoothOracle& f : p.ineq)
    if (f.value(x0) > tol) return false;
  for (const SmoothOracle& c : p.eq)
    if (std::abs(c.value(x0)) > tol) return false;
  return true;
}

Dataset synthetic_gaussian_dataset(int num_classes, int per_class, int dim,
                                   std::uint64_t seed, double mean_scale,
                                   double noise) {
  if (num_classes < 2 || per_class < 1 || dim < 1)
    throw std::invalid_argument("synthetic_gaussian_dataset: bad shape");
  Dataset data;
  Rng rng(seed);
  for (int k = 0; k < num_classes; ++k) {
    Vector mean = Vector::Constant(dim, mean_scale);
    mean[k % dim] += mean_scale;
    Matrix points(per_class, dim);
    for (int i = 0; i < per_class; ++i)
      for (int j = 0; j < dim; ++j)
        points(i, j) = mean[j] + noise * rng.normal();
    data.classes.push_back(std::move(points));
    data.labels.push_back(k + 1);
  }
  return data;
}

}  // namespace ippp
