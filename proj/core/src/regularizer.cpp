#include "ippp/regularizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ippp {

Regularizer Regularizer::indicator(DomainSet domain) {
  return Regularizer(std::move(domain));
}

Regularizer Regularizer::indicator_plus_l1(DomainSet domain, double weight) {
  if (!(weight > 0.0))
    throw std::invalid_argument("indicator_plus_l1: weight must be positive");
  if (domain.kind() != DomainSet::Kind::Box)
    throw std::invalid_argument(
        "indicator_plus_l1: l1 terms are only supported on Box domains");
  Regularizer r(std::move(domain));
  r.l1_weight_ = weight;
  double g = 0.0;
  const Vector& lo = r.domain_.lower();
  const Vector& hi = r.domain_.upper();
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    g += std::max(std::abs(lo[i]), std::abs(hi[i]));
  r.value_bound_ = weight * g;
  r.subgrad_bound_ = weight * std::sqrt(static_cast<double>(lo.size()));
  return r;
}

double Regularizer::value(const Vector& x) const {
  if (!domain_.contains(x)) return std::numeric_limits<double>::infinity();
  if (l1_weight_ == 0.0) return 0.0;
  return l1_weight_ * x.lpNorm<1>();
}

Vector Regularizer::prox(const Vector& z, double step) const {
  if (!(step > 0.0)) throw std::invalid_argument("prox: step must be positive");
  if (z.size() != domain_.dim())
    throw std::invalid_argument("prox: dimension mismatch");
  if (!all_finite(z)) throw std::invalid_argument("prox: non-finite input");
  if (l1_weight_ == 0.0) return domain_.project(z);
  // Box + l1: soft-threshold then clamp, valid coordinatewise in 1-d.
  const double t = step * l1_weight_;
  Vector u(z.size());
  const Vector& lo = domain_.lower();
  const Vector& hi = domain_.upper();
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double s = 0.0;
    if (z[i] > t)
      s = z[i] - t;
    else if (z[i] < -t)
      s = z[i] + t;
    u[i] = std::min(std::max(s, lo[i]), hi[i]);
  }
  return u;
}

double Regularizer::dist_to_neg_subdiff(const Vector& x, const Vector& v) const {
  if (l1_weight_ == 0.0) return domain_.dist_to_neg_normal_cone(x, v);
  if (x.size() != domain_.dim() || v.size() != domain_.dim())
    throw std::invalid_argument("dist_to_neg_subdiff: dimension mismatch");
  // Box + l1: -subdiff r(x) is a coordinatewise interval (possibly a ray or
  // all of R); distance decomposes per coordinate.
  constexpr double kActivityTol = 1e-8;
  const double inf = std::numeric_limits<double>::infinity();
  const Vector& lower = domain_.lower();
  const Vector& upper = domain_.upper();
  double sq = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double slo, shi;  // -subdiff of w|.| at x_i
    if (x[i] > 0.0) {
      slo = shi = -l1_weight_;
    } else if (x[i] < 0.0) {
      slo = shi = l1_weight_;
    } else {
      slo = -l1_weight_;
      shi = l1_weight_;
    }
    const double scale_l = std::max(1.0, std::abs(lower[i]));
    const double scale_u = std::max(1.0, std::abs(upper[i]));
    const bool at_l = x[i] - lower[i] <= kActivityTol * scale_l;
    const bool at_u = upper[i] - x[i] <= kActivityTol * scale_u;
    double nlo = 0.0, nhi = 0.0;  // -N_i
    if (at_l && at_u) {
      nlo = -inf;
      nhi = inf;
    } else if (at_u) {
      nlo = -inf;
    } else if (at_l) {
      nhi = inf;
    }
    const double lo = slo + nlo;
    const double hi = shi + nhi;
    double d = 0.0;
    if (v[i] < lo)
      d = lo - v[i];
    else if (v[i] > hi)
      d = v[i] - hi;
    sq += d * d;
  }
  return std::sqrt(sq);
}

}  // namespace ippp
