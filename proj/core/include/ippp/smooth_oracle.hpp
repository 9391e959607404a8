#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ippp/types.hpp"

namespace ippp {

// Optional analytic metadata attached to a smooth function. All three are
// bounds over the feasible domain of the problem the oracle belongs to:
//   smoothness       L   with ||grad h(x) - grad h(y)|| <= L ||x - y||
//   weak_convexity   rho with h + (rho/2)||.||^2 convex
//   value_grad_bound B   with |h(x)| <= B and ||grad h(x)|| <= B
struct OracleMeta {
  std::optional<double> smoothness;
  std::optional<double> weak_convexity;
  std::optional<double> value_grad_bound;
};

// Value/gradient oracle for a smooth function. Closures own whatever data
// they capture; copying an oracle copies the handles, not the data.
class SmoothOracle {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradFn = std::function<Vector(const Vector&)>;
  using ValueGradFn = std::function<std::pair<double, Vector>(const Vector&)>;

  SmoothOracle() = default;
  SmoothOracle(ValueFn value, GradFn grad, OracleMeta meta = {})
      : value_(std::move(value)), grad_(std::move(grad)), meta_(meta) {}

  // Single-pass value+gradient for oracles where the two share work.
  static SmoothOracle fused(ValueGradFn vg, OracleMeta meta = {}) {
    SmoothOracle o;
    o.fused_ = std::move(vg);
    o.value_ = [f = o.fused_](const Vector& x) { return f(x).first; };
    o.grad_ = [f = o.fused_](const Vector& x) { return f(x).second; };
    o.meta_ = meta;
    return o;
  }

  double value(const Vector& x) const { return value_(x); }
  Vector grad(const Vector& x) const { return grad_(x); }

  std::pair<double, Vector> value_and_grad(const Vector& x) const {
    if (fused_) return fused_(x);
    return {value_(x), grad_(x)};
  }

  const OracleMeta& meta() const { return meta_; }
  OracleMeta& meta() { return meta_; }

  explicit operator bool() const { return static_cast<bool>(value_); }

 private:
  ValueFn value_;
  GradFn grad_;
  ValueGradFn fused_;
  OracleMeta meta_;
};

}  // namespace ippp
