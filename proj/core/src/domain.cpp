#include "ippp/domain.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ippp {

namespace {
constexpr double kMembershipTol = 1e-9;
constexpr double kActivityTol = 1e-8;
}  // namespace

DomainSet DomainSet::ball(int dim, double radius) {
  return ball_product({dim}, {radius});
}

DomainSet DomainSet::ball_product(const std::vector<int>& block_dims,
                                  const std::vector<double>& radii) {
  if (block_dims.size() != radii.size() || block_dims.empty())
    throw std::invalid_argument("ball_product: need one radius per block");
  DomainSet d;
  d.kind_ = Kind::BallProduct;
  d.block_dims_ = block_dims;
  d.radii_ = radii;
  d.block_offsets_.resize(block_dims.size());
  int off = 0;
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    if (block_dims[b] <= 0)
      throw std::invalid_argument("ball_product: block dims must be positive");
    if (!(radii[b] > 0.0))
      throw std::invalid_argument("ball_product: radii must be positive");
    d.block_offsets_[b] = off;
    off += block_dims[b];
  }
  d.dim_ = off;
  return d;
}

DomainSet DomainSet::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size() || lower.size() == 0)
    throw std::invalid_argument("box: bound vectors must match and be nonempty");
  for (Eigen::Index i = 0; i < lower.size(); ++i)
    if (!(lower[i] <= upper[i]))
      throw std::invalid_argument("box: requires lower <= upper");
  DomainSet d;
  d.kind_ = Kind::Box;
  d.dim_ = static_cast<int>(lower.size());
  d.lower_ = std::move(lower);
  d.upper_ = std::move(upper);
  return d;
}

double DomainSet::diameter() const {
  if (kind_ == Kind::BallProduct) {
    double s = 0.0;
    for (double r : radii_) s += r * r;
    return 2.0 * std::sqrt(s);
  }
  return (upper_ - lower_).norm();
}

Vector DomainSet::project(const Vector& x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("project: dimension mismatch");
  if (!all_finite(x)) throw std::invalid_argument("project: non-finite input");
  Vector p = x;
  if (kind_ == Kind::BallProduct) {
    for (std::size_t b = 0; b < block_dims_.size(); ++b) {
      auto seg = p.segment(block_offsets_[b], block_dims_[b]);
      const double n = seg.norm();
      if (n > radii_[b]) seg *= radii_[b] / n;
    }
  } else {
    p = p.cwiseMax(lower_).cwiseMin(upper_);
  }
  return p;
}

bool DomainSet::contains(const Vector& x) const {
  if (x.size() != dim_) return false;
  if (!all_finite(x)) return false;
  const double tol = kMembershipTol * (1.0 + x.norm());
  return (x - project(x)).norm() <= tol;
}

double DomainSet::dist_to_neg_normal_cone(const Vector& x,
                                          const Vector& v) const {
  if (x.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("dist_to_neg_normal_cone: dimension mismatch");
  double sq = 0.0;
  if (kind_ == Kind::BallProduct) {
    for (std::size_t b = 0; b < block_dims_.size(); ++b) {
      const auto xb = x.segment(block_offsets_[b], block_dims_[b]);
      const auto vb = v.segment(block_offsets_[b], block_dims_[b]);
      const double xn = xb.norm();
      if (xn >= radii_[b] * (1.0 - kActivityTol)) {
        // -N is the ray along -x_b: the ray absorbs any nonpositive radial
        // component of v_b, the rest is orthogonal distance. The residual is
        // formed as a vector; the Pythagorean form ||v||^2 - radial^2 cancels
        // catastrophically when v is nearly antiparallel to x.
        const double radial = xb.dot(vb) / xn;
        if (radial <= 0.0)
          sq += (vb - (radial / xn) * xb).squaredNorm();
        else
          sq += vb.squaredNorm();
      } else {
        sq += vb.squaredNorm();
      }
    }
  } else {
    for (Eigen::Index i = 0; i < dim_; ++i) {
      const double scale_l = std::max(1.0, std::abs(lower_[i]));
      const double scale_u = std::max(1.0, std::abs(upper_[i]));
      const bool at_l = x[i] - lower_[i] <= kActivityTol * scale_l;
      const bool at_u = upper_[i] - x[i] <= kActivityTol * scale_u;
      // -N_i: at the upper bound (-inf, 0], at the lower bound [0, inf),
      // at a pinched coordinate all of R, in the interior {0}.
      double d;
      if (at_l && at_u)
        d = 0.0;
      else if (at_u)
        d = std::max(v[i], 0.0);
      else if (at_l)
        d = std::min(v[i], 0.0);
      else
        d = v[i];
      sq += d * d;
    }
  }
  return std::sqrt(sq);
}

Matrix DomainSet::normal_cone_generators(const Vector& x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("normal_cone_generators: dimension mismatch");
  std::vector<Vector> cols;
  if (kind_ == Kind::BallProduct) {
    for (std::size_t b = 0; b < block_dims_.size(); ++b) {
      const auto xb = x.segment(block_offsets_[b], block_dims_[b]);
      const double xn = xb.norm();
      if (xn >= radii_[b] * (1.0 - kActivityTol) && xn > 0.0) {
        Vector g = Vector::Zero(dim_);
        g.segment(block_offsets_[b], block_dims_[b]) = xb / xn;
        cols.push_back(std::move(g));
      }
    }
  } else {
    for (Eigen::Index i = 0; i < dim_; ++i) {
      const double scale_l = std::max(1.0, std::abs(lower_[i]));
      const double scale_u = std::max(1.0, std::abs(upper_[i]));
      if (upper_[i] - x[i] <= kActivityTol * scale_u) {
        Vector g = Vector::Zero(dim_);
        g[i] = 1.0;
        cols.push_back(std::move(g));
      }
      if (x[i] - lower_[i] <= kActivityTol * scale_l) {
        Vector g = Vector::Zero(dim_);
        g[i] = -1.0;
        cols.push_back(std::move(g));
      }
    }
  }
  Matrix G(dim_, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) G.col(j) = cols[j];
  return G;
}

Vector DomainSet::sample_uniform(Rng& rng) const {
  Vector x(dim_);
  if (kind_ == Kind::BallProduct) {
    for (std::size_t b = 0; b < block_dims_.size(); ++b) {
      const int d = block_dims_[b];
      Vector g(d);
      double n = 0.0;
      do {
        for (int i = 0; i < d; ++i) g[i] = rng.normal();
        n = g.norm();
      } while (n == 0.0);
      const double u = rng.uniform();
      const double scale = radii_[b] * std::pow(u, 1.0 / d) / n;
      x.segment(block_offsets_[b], d) = g * scale;
    }
  } else {
    for (Eigen::Index i = 0; i < dim_; ++i)
      x[i] = rng.uniform(lower_[i], upper_[i]);
  }
  return x;
}

}  // namespace ippp
