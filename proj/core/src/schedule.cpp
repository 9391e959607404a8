#include "ippp/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ippp {

namespace {
constexpr double kEpsHatFloor = 1e-12;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
}
}  // namespace

Schedule Schedule::convex_sqrt(double gamma, double beta,
                               std::optional<double> rho0) {
  // The rho0 comparison subsumes positivity when rho0 >= 0 is declared, and
  // its message names the actual requirement.
  if (rho0 && !(gamma > *rho0))
    throw std::invalid_argument(
        "Schedule: ConvexSqrt requires gamma > rho0 (proximal weight must "
        "dominate the objective's weak convexity)");
  require_positive(gamma, "Schedule: gamma");
  require_positive(beta, "Schedule: beta");
  Schedule s;
  s.variant_ = Variant::ConvexSqrt;
  s.beta_ = beta;
  s.gamma_ = gamma;
  s.rho0_ = rho0;
  return s;
}

Schedule Schedule::nonconvex_cbrt(double beta, double rho0, double rho_c) {
  require_positive(beta, "Schedule: beta");
  if (rho0 < 0.0 || rho_c < 0.0)
    throw std::invalid_argument("Schedule: rho0 and rho_c must be >= 0");
  if (rho0 == 0.0 && rho_c == 0.0)
    throw std::invalid_argument(
        "Schedule: NonconvexCbrt with rho0 = rho_c = 0 gives gamma_k = 0; "
        "supply a positive gamma instead");
  Schedule s;
  s.variant_ = Variant::NonconvexCbrt;
  s.beta_ = beta;
  s.rho0_ = rho0;
  s.rho_c_ = rho_c;
  return s;
}

Schedule Schedule::nonconvex_cbrt_gamma(double beta, double gamma) {
  require_positive(beta, "Schedule: beta");
  require_positive(gamma, "Schedule: gamma");
  Schedule s;
  s.variant_ = Variant::NonconvexCbrt;
  s.beta_ = beta;
  s.gamma_ = gamma;
  return s;
}

Schedule Schedule::constant_feasible(double beta, double rho0, double rho_c) {
  require_positive(beta, "Schedule: beta");
  if (rho0 < 0.0 || rho_c < 0.0)
    throw std::invalid_argument("Schedule: rho0 and rho_c must be >= 0");
  if (rho0 == 0.0 && rho_c == 0.0)
    throw std::invalid_argument(
        "Schedule: ConstantFeasible with rho0 = rho_c = 0 gives gamma_k = 0; "
        "supply a positive gamma instead");
  Schedule s;
  s.variant_ = Variant::ConstantFeasible;
  s.beta_ = beta;
  s.rho0_ = rho0;
  s.rho_c_ = rho_c;
  return s;
}

Schedule Schedule::constant_feasible_gamma(double beta, double gamma) {
  require_positive(beta, "Schedule: beta");
  require_positive(gamma, "Schedule: gamma");
  Schedule s;
  s.variant_ = Variant::ConstantFeasible;
  s.beta_ = beta;
  s.gamma_ = gamma;
  return s;
}

ScheduleValues Schedule::at(long k) const {
  if (k < 0) throw std::invalid_argument("Schedule::at: k must be >= 0");
  const double k1 = static_cast<double>(k) + 1.0;
  ScheduleValues v;
  switch (variant_) {
    case Variant::ConvexSqrt:
      v.gamma = *gamma_;
      v.beta = beta_ * std::sqrt(k1);
      v.eps_hat = 1.0 / (v.beta * k1);
      break;
    case Variant::NonconvexCbrt:
      v.beta = beta_ * std::cbrt(k1);
      v.gamma = gamma_ ? *gamma_ * std::cbrt(k1)
                       : 2.0 * (*rho0_ + v.beta * *rho_c_);
      v.eps_hat = 1.0 / (beta_ * std::pow(k1, 4.0 / 3.0));
      break;
    case Variant::ConstantFeasible:
      v.beta = beta_;
      v.gamma = gamma_ ? *gamma_ : 2.0 * (*rho0_ + beta_ * *rho_c_);
      v.eps_hat = 1.0 / (k1 * k1);
      break;
  }
  v.eps_hat = std::max(v.eps_hat, kEpsHatFloor);
  return v;
}

}  // namespace ippp
