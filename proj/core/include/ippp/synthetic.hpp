#pragma once

#include <cstdint>

#include "ippp/dataset.hpp"
#include "ippp/ippp_solver.hpp"
#include "ippp/problem.hpp"

namespace ippp {

// Test fixtures with exact certificates.
enum class SyntheticKind { ConvexQP, WeaklyConvex };

struct SyntheticCertificate {
  // ConvexQP: the exact KKT point with its multipliers (complementary
  // slackness holds exactly; the ball is inactive at x_star).
  // WeaklyConvex: a strictly feasible start (the origin) with empty
  // multipliers.
  Vector x_star;
  Multipliers mult;
  double rho0 = 0.0;   // weak convexity of f0
  double rho_c = 0.0;  // sum over constraints of rho_i * B_i
};

struct SyntheticInstance {
  ConstrainedProblem problem;
  SyntheticCertificate cert;
};

// ConvexQP: f0 = 0.5||x - x0||^2, one affine inequality active at the
// solution, an affine equality on even seeds, ball domain of radius 3. Built
// certificate-first: x_star and the multipliers are drawn, then the data is
// assembled so the KKT system holds exactly.
//
// WeaklyConvex: f0 = 0.5||Ax - b||^2 + 0.05 sum_i sin(x_i) (rho0 = 0.05
// exactly), one indefinite quadratic inequality x'Px - 0.005 with
// P = diag(0.2, -2e-4, 0.2, ...) so rho_1 = 4e-4 exactly, ball of radius
// 0.25. The origin is strictly feasible and the constraint becomes active
// elsewhere in the ball.
SyntheticInstance synthetic_build(SyntheticKind kind, std::uint64_t seed,
                                  int dim);

// min (x-1)^2 s.t. x <= 0 over [-2, 2]; certificate x* = 0, lambda* = 2.
SyntheticInstance qp1d();

// Fixed 5-d ConvexQP: x0 = ones, constraint (1,2,0,-1,1).x <= 1, ball radius
// 3; certificate x* = x0 - (2/7) a, lambda* = 2/7.
SyntheticInstance qp5d();

// synthetic_build(WeaklyConvex, 0, 2); the deterministic instance the
// feasible-start tests run on.
SyntheticInstance weakly_convex_fixture();

// max_i f_i(x0) <= tol and max_j |c_j(x0)| <= tol.
bool verify_initial_feasibility(const ConstrainedProblem& p, const Vector& x0,
                                double tol);

// Gaussian clusters with strictly positive means: class k is centered at
// mean_scale * (ones + e_{k mod d}) with isotropic noise. Positive means keep
// pairwise inner products of the points nonnegative in practice, which is
// what the lifted non-singularity construction wants.
Dataset synthetic_gaussian_dataset(int num_classes, int per_class, int dim,
                                   std::uint64_t seed,
                                   double mean_scale = 1.5,
                                   double noise = 0.5);

}  // namespace ippp
