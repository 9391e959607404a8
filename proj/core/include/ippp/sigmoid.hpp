#pragma once

#include <cmath>

namespace ippp {

// phi(z) = 1 / (1 + exp(z)), the decreasing sigmoid surrogate for the 0-1
// loss. |phi'| <= 1/4 and |phi''| <= 1/(6 sqrt(3)); both bounds are attained.
double sigmoid_loss(double z);

// phi'(z) = -phi(z) * phi(-z), always in [-1/4, 0).
double sigmoid_loss_deriv(double z);

inline constexpr double kSigmoidDerivBound = 0.25;
inline const double kSigmoidCurvBound = 1.0 / (6.0 * std::sqrt(3.0));

}  // namespace ippp
