#pragma once

#include "ippp/types.hpp"

namespace ippp {

struct NnlsResult {
  Vector x;            // x >= 0, minimizing ||A x - b||
  double residual = 0; // ||A x - b|| at the solution
  int iterations = 0;  // outer active-set iterations
};

// Nonnegative least squares by the Lawson-Hanson active-set method.
// Iteration cap is 30 per column; the KKT conditions
//   grad_i >= 0 where x_i = 0,  grad_i = 0 where x_i > 0
// are verified on exit to 1e-10 (relative to the data scale) and a failure
// throws. Columns that are identically zero stay at x_i = 0.
NnlsResult nnls(const Matrix& A, const Vector& b);

}  // namespace ippp
