#include "ippp/mnpc.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ippp/sigmoid.hpp"

namespace ippp {

namespace {

// Average pairwise sigmoid loss of one class, minus shift:
//   (1/N) sum_{xi} sum_{l != k} phi(w_k.xi - w_l.xi) - shift.
SmoothOracle class_loss_oracle(Matrix points, int class_index, int num_classes,
                               int dim, double shift) {
  const double max_norm = points.rowwise().norm().maxCoeff();
  const double pairs = static_cast<double>(num_classes - 1);

  OracleMeta meta;
  meta.smoothness = pairs * 2.0 * max_norm * max_norm * kSigmoidCurvBound;
  meta.weak_convexity = meta.smoothness;
  const double grad_bound =
      pairs * std::sqrt(2.0) * max_norm * kSigmoidDerivBound;
  const double value_bound =
      shift == 0.0 ? pairs : std::max(shift, pairs - shift);
  meta.value_grad_bound = std::max(value_bound, grad_bound);

  auto body = [points = std::move(points), class_index, num_classes, dim,
               shift](const Vector& x) -> std::pair<double, Vector> {
    const Eigen::Index n = points.rows();
    Eigen::Map<const Matrix> W(x.data(), dim, num_classes);
    Matrix scores = points * W;  // n x K

    double acc = 0.0;
    Vector grad = Vector::Zero(x.size());
    Eigen::Map<Matrix> G(grad.data(), dim, num_classes);
    Vector deriv(n);
    for (int l = 0; l < num_classes; ++l) {
      if (l == class_index) continue;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double z = scores(i, class_index) - scores(i, l);
        acc += sigmoid_loss(z);
        deriv[i] = sigmoid_loss_deriv(z);
      }
      Vector pulled = points.transpose() * deriv;
      G.col(class_index) += pulled;
      G.col(l) -= pulled;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    return {acc * inv_n - shift, grad * inv_n};
  };
  return SmoothOracle::fused(std::move(body), meta);
}

}  // namespace

ConstrainedProblem mnpc_build(const Dataset& data, const std::vector<double>& r,
                              double lambda) {
  if (!data.valid()) throw std::invalid_argument("mnpc_build: invalid dataset");
  const int K = data.num_classes();
  const int d = data.dim();
  if (static_cast<int>(r.size()) != K - 1)
    throw std::invalid_argument("mnpc_build: need K-1 thresholds");
  for (double rk : r)
    if (!(rk > 0.0)) throw std::invalid_argument("mnpc_build: thresholds must be > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("mnpc_build: lambda must be > 0");

  ConstrainedProblem problem;
  problem.f0 = class_loss_oracle(data.classes[0], 0, K, d, 0.0);
  problem.ineq.reserve(static_cast<std::size_t>(K - 1));
  for (int k = 1; k < K; ++k)
    problem.ineq.push_back(class_loss_oracle(
        data.classes[static_cast<std::size_t>(k)], k, K, d,
        r[static_cast<std::size_t>(k - 1)]));
  problem.reg = Regularizer::indicator(DomainSet::ball_product(
      std::vector<int>(static_cast<std::size_t>(K), d),
      std::vector<double>(static_cast<std::size_t>(K), lambda)));
  return problem;
}

}  // namespace ippp
