#include "ippp/nnls.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ippp {

namespace {

// Least squares restricted to the passive columns; zeros elsewhere.
Vector solve_passive(const Matrix& A, const Vector& b,
                     const std::vector<int>& passive) {
  Vector z = Vector::Zero(A.cols());
  if (passive.empty()) return z;
  Matrix Ap(A.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t j = 0; j < passive.size(); ++j) Ap.col(j) = A.col(passive[j]);
  Vector zp = Ap.colPivHouseholderQr().solve(b);
  for (std::size_t j = 0; j < passive.size(); ++j) z[passive[j]] = zp[j];
  return z;
}

}  // namespace

NnlsResult nnls(const Matrix& A, const Vector& b) {
  const Eigen::Index n = A.cols();
  NnlsResult out;
  out.x = Vector::Zero(n);
  if (n == 0) {
    out.residual = b.norm();
    return out;
  }

  const double scale = 1.0 + (A.transpose() * b).cwiseAbs().maxCoeff();
  const double kEntryTol = 1e-12 * scale;  // admission threshold for w_j
  const double kKktTol = 1e-10 * scale;
  const int max_iter = 30 * static_cast<int>(n);

  std::vector<bool> in_passive(n, false);
  std::vector<int> passive;
  Vector x = Vector::Zero(n);
  Vector w = A.transpose() * (b - A * x);

  int iter = 0;
  while (iter < max_iter) {
    // Pick the most violating zero coordinate.
    int best = -1;
    double best_w = kEntryTol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_passive[j] && w[j] > best_w) {
        best_w = w[j];
        best = static_cast<int>(j);
      }
    }
    if (best < 0) break;

    in_passive[best] = true;
    passive.push_back(best);
    ++iter;
    ++out.iterations;

    Vector z = solve_passive(A, b, passive);
    // Inner loop: walk back toward x until the passive solve is nonnegative.
    while (true) {
      double min_zp = std::numeric_limits<double>::infinity();
      for (int j : passive) min_zp = std::min(min_zp, z[j]);
      if (min_zp > 0.0) break;

      double alpha = 1.0;
      for (int j : passive) {
        if (z[j] <= 0.0) {
          double denom = x[j] - z[j];
          if (denom > 0.0) alpha = std::min(alpha, x[j] / denom);
        }
      }
      x += alpha * (z - x);
      // Coordinates driven to the boundary leave the passive set.
      std::vector<int> still;
      still.reserve(passive.size());
      for (int j : passive) {
        if (x[j] <= 1e-14 * scale) {
          x[j] = 0.0;
          in_passive[j] = false;
        } else {
          still.push_back(j);
        }
      }
      if (still.size() == passive.size()) {
        // Rounding kept every coordinate positive; evict the most negative
        // passive solve entry so the walk cannot cycle.
        int worst = passive.front();
        for (int j : passive)
          if (z[j] < z[worst]) worst = j;
        x[worst] = 0.0;
        in_passive[worst] = false;
        still.clear();
        for (int j : passive)
          if (j != worst) still.push_back(j);
      }
      passive = std::move(still);
      if (passive.empty()) {
        x.setZero();
        break;
      }
      z = solve_passive(A, b, passive);
    }
    if (!passive.empty()) x = z;
    w = A.transpose() * (b - A * x);
  }

  // KKT certificate: nonnegative gradient off the support, zero on it.
  w = A.transpose() * (b - A * x);
  for (Eigen::Index j = 0; j < n; ++j) {
    bool ok = (x[j] > 0.0) ? (std::abs(w[j]) <= kKktTol) : (w[j] <= kKktTol);
    if (!ok)
      throw std::runtime_error(
          "nnls: KKT certificate failed (iteration cap 30*cols reached on "
          "ill-conditioned data)");
  }

  out.x = x;
  out.residual = (A * x - b).norm();
  return out;
}

}  // namespace ippp
