// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The stokesmg authors

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stokesmg {

/// Gauss--Legendre rule on the unit interval [0,1].
struct Quadrature1D {
  std::vector<double> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
};

namespace detail {

// Legendre polynomial P_n and its derivative at t in (-1,1).
inline std::pair<double, double> legendre(int n, double t) {
  double p0 = 1.0, p1 = t;
  if (n == 0) return {1.0, 0.0};
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (t * p1 - p0) / (t * t - 1.0);
  return {p1, dp};
}

}  // namespace detail

/// n-point Gauss--Legendre rule on [0,1]; exact for polynomials of degree 2n-1.
inline Quadrature1D gauss_quadrature(int n) {
  if (n < 1) throw std::invalid_argument("gauss_quadrature: n must be >= 1");
  Quadrature1D q;
  q.points.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = detail::legendre(n, t);
      dp = d;
      const double dt = p / d;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        dp = detail::legendre(n, t).second;
        break;
      }
    }
    // Map (-1,1) -> (0,1); nodes come out in descending t order.
    q.points[n - 1 - i] = 0.5 * (t + 1.0);
    q.weights[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
  return q;
}

/// n_points Gauss--Lobatto points on [0,1] (endpoints included), n_points >= 2.
inline std::vector<double> gauss_lobatto_points(int n_points) {
  if (n_points < 2)
    throw std::invalid_argument("gauss_lobatto_points: need >= 2 points");
  const int n = n_points - 1;  // interior points are roots of P'_n
  std::vector<double> pts(n_points);
  pts.front() = 0.0;
  pts.back() = 1.0;
  for (int i = 1; i < n; ++i) {
    // Initial guess: Chebyshev--Lobatto abscissa, then Newton on P'_n.
    double t = std::cos(M_PI * i / n);
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = detail::legendre(n, t);
      // ddp from the Legendre ODE: (1-t^2) P'' = 2 t P' - n(n+1) P
      const double ddp = (2.0 * t * dp - n * (n + 1) * p) / (1.0 - t * t);
      const double dt = dp / ddp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    pts[n - i] = 0.5 * (t + 1.0);
  }
  return pts;
}

}  // namespace stokesmg
