#pragma once

#include <vector>

#include "ippp/regularizer.hpp"
#include "ippp/smooth_oracle.hpp"

namespace ippp {

// min  f0(x) + r(x)   s.t.  ineq_i(x) <= 0,  eq_j(x) = 0.
//
// f0 and every constraint are smooth oracles with optional metadata; r is a
// structured regularizer whose domain is the compact set the analysis works
// over.
struct ConstrainedProblem {
  SmoothOracle f0;
  std::vector<SmoothOracle> ineq;
  std::vector<SmoothOracle> eq;
  Regularizer reg = Regularizer::indicator(DomainSet::ball(1, 1.0));

  int dim() const { return reg.domain().dim(); }

  Vector eval_ineq(const Vector& x) const {
    Vector f(ineq.size());
    for (std::size_t i = 0; i < ineq.size(); ++i) f[i] = ineq[i].value(x);
    return f;
  }

  Vector eval_eq(const Vector& x) const {
    Vector c(eq.size());
    for (std::size_t j = 0; j < eq.size(); ++j) c[j] = eq[j].value(x);
    return c;
  }

  // Rows are constraint gradients.
  Matrix ineq_jacobian(const Vector& x) const {
    Matrix J(static_cast<Eigen::Index>(ineq.size()), x.size());
    for (std::size_t i = 0; i < ineq.size(); ++i)
      J.row(static_cast<Eigen::Index>(i)) = ineq[i].grad(x).transpose();
    return J;
  }

  Matrix eq_jacobian(const Vector& x) const {
    Matrix J(static_cast<Eigen::Index>(eq.size()), x.size());
    for (std::size_t j = 0; j < eq.size(); ++j)
      J.row(static_cast<Eigen::Index>(j)) = eq[j].grad(x).transpose();
    return J;
  }
};

}  // namespace ippp
