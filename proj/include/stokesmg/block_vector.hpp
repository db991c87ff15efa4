// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The stokesmg authors

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace stokesmg {

/// Global coefficient vector split into one block per velocity component
/// plus a pressure block, parameterized by scalar precision.
template <int dim, class T = double>
struct BlockVector {
  std::array<std::vector<T>, dim> velocity;
  std::vector<T> pressure;

  BlockVector() = default;

  void resize(const std::array<std::int64_t, dim>& vsizes, std::int64_t psize) {
    for (int c = 0; c < dim; ++c) velocity[c].assign(vsizes[c], T(0));
    pressure.assign(psize, T(0));
  }

  std::int64_t size() const {
    std::int64_t n = pressure.size();
    for (int c = 0; c < dim; ++c) n += velocity[c].size();
    return n;
  }

  void set_zero() {
    for (int c = 0; c < dim; ++c)
      std::fill(velocity[c].begin(), velocity[c].end(), T(0));
    std::fill(pressure.begin(), pressure.end(), T(0));
  }

  template <class U>
  void copy_from(const BlockVector<dim, U>& other) {
    for (int c = 0; c < dim; ++c) {
      velocity[c].resize(other.velocity[c].size());
      for (std::size_t i = 0; i < velocity[c].size(); ++i)
        velocity[c][i] = static_cast<T>(other.velocity[c][i]);
    }
    pressure.resize(other.pressure.size());
    for (std::size_t i = 0; i < pressure.size(); ++i)
      pressure[i] = static_cast<T>(other.pressure[i]);
  }
};

template <int dim, class T>
double dot(const BlockVector<dim, T>& a, const BlockVector<dim, T>& b) {
  double s = 0.0;
  for (int c = 0; c < dim; ++c)
    for (std::size_t i = 0; i < a.velocity[c].size(); ++i)
      s += double(a.velocity[c][i]) * double(b.velocity[c][i]);
  for (std::size_t i = 0; i < a.pressure.size(); ++i)
    s += double(a.pressure[i]) * double(b.pressure[i]);
  return s;
}

template <int dim, class T>
double norm(const BlockVector<dim, T>& a) {
  return std::sqrt(dot(a, a));
}

/// y += alpha * x
template <int dim, class T>
void axpy(T alpha, const BlockVector<dim, T>& x, BlockVector<dim, T>& y) {
  for (int c = 0; c < dim; ++c)
    for (std::size_t i = 0; i < x.velocity[c].size(); ++i)
      y.velocity[c][i] += alpha * x.velocity[c][i];
  for (std::size_t i = 0; i < x.pressure.size(); ++i)
    y.pressure[i] += alpha * x.pressure[i];
}

template <int dim, class T>
void scale(T alpha, BlockVector<dim, T>& x) {
  for (int c = 0; c < dim; ++c)
    for (auto& v : x.velocity[c]) v *= alpha;
  for (auto& v : x.pressure) v *= alpha;
}

/// y = b - y (used for residuals computed in place)
template <int dim, class T>
void subtract_from(const BlockVector<dim, T>& b, BlockVector<dim, T>& y) {
  for (int c = 0; c < dim; ++c)
    for (std::size_t i = 0; i < y.velocity[c].size(); ++i)
      y.velocity[c][i] = b.velocity[c][i] - y.velocity[c][i];
  for (std::size_t i = 0; i < y.pressure.size(); ++i)
    y.pressure[i] = b.pressure[i] - y.pressure[i];
}

}  // namespace stokesmg
