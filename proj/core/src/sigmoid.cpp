#include "ippp/sigmoid.hpp"

namespace ippp {

double sigmoid_loss(double z) {
  // Evaluate through exp of a nonpositive argument so large |z| cannot
  // overflow.
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

double sigmoid_loss_deriv(double z) {
  return -sigmoid_loss(z) * sigmoid_loss(-z);
}

}  // namespace ippp
