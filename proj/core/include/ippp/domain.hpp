#pragma once

#include <vector>

#include "ippp/rng.hpp"
#include "ippp/types.hpp"

namespace ippp {

// Closed convex domain with cheap projection and an explicit normal cone.
// Two shapes are supported:
//   BallProduct: X = {x : ||x_b|| <= r_b for each block b} for a fixed
//                partition of the coordinates into contiguous blocks;
//   Box:         X = {x : l <= x <= u} componentwise.
class DomainSet {
 public:
  enum class Kind { BallProduct, Box };

  static DomainSet ball(int dim, double radius);
  static DomainSet ball_product(const std::vector<int>& block_dims,
                                const std::vector<double>& radii);
  static DomainSet box(Vector lower, Vector upper);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  // Euclidean diameter: 2 sqrt(sum r_b^2) for ball products, ||u - l|| for
  // boxes.
  double diameter() const;

  Vector project(const Vector& x) const;

  // Membership up to displacement 1e-9 * (1 + ||x||) from the projection.
  bool contains(const Vector& x) const;

  // dist(v, -N_X(x)) for x in X. Normal-cone activity uses a relative
  // boundary tolerance of 1e-8.
  double dist_to_neg_normal_cone(const Vector& x, const Vector& v) const;

  // Columns generate N_X(x) as their conic hull: the outward block radius
  // for active ball blocks, +/- coordinate axes for active box bounds. An
  // empty matrix (dim x 0) means N_X(x) = {0}.
  Matrix normal_cone_generators(const Vector& x) const;

  Vector sample_uniform(Rng& rng) const;

  const std::vector<int>& block_dims() const { return block_dims_; }
  const std::vector<double>& radii() const { return radii_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

 private:
  DomainSet() = default;

  Kind kind_ = Kind::Box;
  int dim_ = 0;
  // BallProduct data.
  std::vector<int> block_dims_;
  std::vector<int> block_offsets_;
  std::vector<double> radii_;
  // Box data.
  Vector lower_, upper_;
};

}  // namespace ippp
