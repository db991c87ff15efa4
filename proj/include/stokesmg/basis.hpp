// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The stokesmg authors

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "stokesmg/quadrature.hpp"

namespace stokesmg {

/// Nodal Lagrange basis on [0,1]. Shape functions satisfy phi_i(node_j) =
/// delta_ij, so coefficients are point values at the nodes.
class Basis1D {
 public:
  explicit Basis1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("Basis1D: empty node set");
  }

  /// Lagrange basis of the given degree at Gauss--Lobatto points.
  static Basis1D gauss_lobatto(int degree) {
    if (degree < 0) throw std::invalid_argument("Basis1D: negative degree");
    if (degree == 0) return Basis1D(std::vector<double>{0.5});
    return Basis1D(gauss_lobatto_points(degree + 1));
  }

  int degree() const { return static_cast<int>(nodes_.size()) - 1; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }

  double value(int i, double x) const {
    double v = 1.0;
    for (int j = 0; j < size(); ++j)
      if (j != i) v *= (x - nodes_[j]) / (nodes_[i] - nodes_[j]);
    return v;
  }

  double derivative(int i, double x) const {
    double d = 0.0;
    for (int m = 0; m < size(); ++m) {
      if (m == i) continue;
      double v = 1.0 / (nodes_[i] - nodes_[m]);
      for (int j = 0; j < size(); ++j)
        if (j != i && j != m) v *= (x - nodes_[j]) / (nodes_[i] - nodes_[j]);
      d += v;
    }
    return d;
  }

 private:
  std::vector<double> nodes_;
};

}  // namespace stokesmg
