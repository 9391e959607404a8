#pragma once

#include <vector>

#include "ippp/dataset.hpp"
#include "ippp/problem.hpp"

namespace ippp {

// Multi-class Neyman-Pearson classification over linear models w_1..w_K with
// ||w_k|| <= lambda:
//
//   min  (1/N_1) sum_{xi in class 1} sum_{l != 1} phi(w_1.xi - w_l.xi)
//   s.t. (1/N_k) sum_{xi in class k} sum_{l != k} phi(w_k.xi - w_l.xi) <= r_k
//
// for k = 2..K, phi the decreasing sigmoid. The variable is the concatenation
// x = (w_1,...,w_K) in R^{Kd}; the domain is the K-fold ball product of
// radius lambda (diameter 2 lambda sqrt(K)).
//
// Oracle metadata, with m = max point norm of the class and K classes:
//   smoothness and weak convexity  (K-1) * 2 m^2 / (6 sqrt(3))
//       each pair term is phi(a.x) with ||a|| = sqrt(2)||xi|| and
//       |phi''| <= 1/(6 sqrt(3)); averaging over the class keeps the bound;
//   gradient norm                  (K-1) * sqrt(2) m / 4   from |phi'| <= 1/4;
//   value bound                    K-1 for the objective (phi < 1), and
//                                  max(r_k, K-1-r_k) for the shifted losses.
// These are conservative domain-wide bounds, not per-instance optima; they
// can be overridden through SmoothOracle::meta() after building.
ConstrainedProblem mnpc_build(const Dataset& data, const std::vector<double>& r,
                              double lambda);

}  // namespace ippp
