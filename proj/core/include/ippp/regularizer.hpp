#pragma once

#include "ippp/domain.hpp"
#include "ippp/types.hpp"

namespace ippp {

// Structured convex regularizer r = indicator(X) + s with s either zero or
// a weighted l1 term w||.||_1. The l1 term is only allowed on Box domains,
// where the prox and the subdifferential stay coordinatewise closed-form.
//
// Declared bounds (used by penalty bookkeeping):
//   value_bound       G with s(x) <= G on X
//   subgrad_norm_bound M with ||xi|| <= M for all xi in subdiff s(x), x in X.
class Regularizer {
 public:
  static Regularizer indicator(DomainSet domain);
  static Regularizer indicator_plus_l1(DomainSet domain, double weight);

  // +inf outside the domain (membership tested with the domain tolerance),
  // s(x) inside.
  double value(const Vector& x) const;

  // argmin_u  step * r(u) + 0.5 ||u - z||^2.
  Vector prox(const Vector& z, double step) const;

  // dist(v, -subdiff r(x)) for x in the domain. This is the kernel behind
  // both the prox-gradient residual and the dual-feasibility residual.
  double dist_to_neg_subdiff(const Vector& x, const Vector& v) const;

  const DomainSet& domain() const { return domain_; }
  double l1_weight() const { return l1_weight_; }
  double value_bound() const { return value_bound_; }
  double subgrad_norm_bound() const { return subgrad_bound_; }

 private:
  explicit Regularizer(DomainSet domain) : domain_(std::move(domain)) {}

  DomainSet domain_;
  double l1_weight_ = 0.0;
  double value_bound_ = 0.0;
  double subgrad_bound_ = 0.0;
};

}  // namespace ippp
