#pragma once

#include <Eigen/Dense>

namespace ippp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// True when every entry is finite (no NaN, no Inf).
inline bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace ippp
