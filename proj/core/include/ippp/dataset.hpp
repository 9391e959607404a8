#pragma once

#include <vector>

#include "ippp/types.hpp"

namespace ippp {

// Multi-class point collection. classes[k] holds the points of class k as
// rows of an N_k x d matrix; labels[k] is the original integer label, kept in
// ascending order so class 0 is always the smallest label.
struct Dataset {
  std::vector<Matrix> classes;
  std::vector<int> labels;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int dim() const { return classes.empty() ? 0 : static_cast<int>(classes.front().cols()); }

  // Every class non-empty and all points share one dimension.
  bool valid() const {
    if (classes.size() < 2 || classes.size() != labels.size()) return false;
    for (const Matrix& c : classes)
      if (c.rows() == 0 || c.cols() != classes.front().cols()) return false;
    return true;
  }
};

}  // namespace ippp
