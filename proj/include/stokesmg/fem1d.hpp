// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The stokesmg authors

#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "stokesmg/basis.hpp"
#include "stokesmg/quadrature.hpp"

namespace stokesmg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Treatment of one endpoint of a univariate SIPG assembly.
///
/// For tangential (orthogonal) directions the velocity is discontinuous
/// across faces, and the end terms of the local bilinear form depend on
/// whether the endpoint face lies on the domain boundary (full Nitsche
/// weights from the boundary sum of the interior penalty form) or in the
/// mesh interior, where the zero extension of the patch function leaves the
/// half-weighted terms of an interior face.
enum class EndCondition {
  none,           ///< no end terms (pure volume + interior faces)
  strong_zero,    ///< eliminate the endpoint row/column (continuous space)
  nitsche,        ///< boundary face: 2*gamma*uv - (dn u)v - u(dn v)
  interior_face,  ///< interior mesh face: gamma*uv - (dn u)v/2 - u(dn v)/2
};

/// Spec-level boundary selector applying the same condition at both ends.
enum class SipgBoundary { strong_zero, weak_nitsche, none };

/// Mass matrix h * int test_i(x) ansatz_j(x) dx on one reference cell scaled
/// to physical size h. Rectangular when the bases differ.
inline Matrix mass_matrix_1d(const Basis1D& ansatz, const Basis1D& test,
                             double h) {
  const int nq = (ansatz.degree() + test.degree()) / 2 + 1;
  const Quadrature1D q = gauss_quadrature(nq);
  Matrix m = Matrix::Zero(test.size(), ansatz.size());
  for (int iq = 0; iq < q.size(); ++iq)
    for (int i = 0; i < test.size(); ++i) {
      const double tv = test.value(i, q.points[iq]) * q.weights[iq] * h;
      for (int j = 0; j < ansatz.size(); ++j)
        m(i, j) += tv * ansatz.value(j, q.points[iq]);
    }
  return m;
}

/// Derivative coupling int psi_i(x) phi_j'(x) dx on the reference cell.
/// h-independent: the 1/h of the physical derivative cancels the measure.
inline Matrix derivative_matrix_1d(const Basis1D& pressure,
                                   const Basis1D& velocity, double /*h*/ = 1.0) {
  const int nq = (pressure.degree() + velocity.degree() + 1) / 2 + 1;
  const Quadrature1D q = gauss_quadrature(nq);
  Matrix d = Matrix::Zero(pressure.size(), velocity.size());
  for (int iq = 0; iq < q.size(); ++iq)
    for (int i = 0; i < pressure.size(); ++i) {
      const double tv = pressure.value(i, q.points[iq]) * q.weights[iq];
      for (int j = 0; j < velocity.size(); ++j)
        d(i, j) += tv * velocity.derivative(j, q.points[iq]);
    }
  return d;
}

namespace detail {

// Volume stiffness (1/h) int phi_i' phi_j' on one cell.
inline Matrix cell_stiffness(const Basis1D& basis, double h) {
  const int nq = basis.degree();  // integrand degree 2(p-1)
  const Quadrature1D q = gauss_quadrature(std::max(nq, 1));
  Matrix k = Matrix::Zero(basis.size(), basis.size());
  for (int iq = 0; iq < q.size(); ++iq)
    for (int i = 0; i < basis.size(); ++i) {
      const double tv = basis.derivative(i, q.points[iq]) * q.weights[iq] / h;
      for (int j = 0; j < basis.size(); ++j)
        k(i, j) += tv * basis.derivative(j, q.points[iq]);
    }
  return k;
}

}  // namespace detail

/// Univariate SIPG discretization of the Laplacian on `cells` consecutive
/// intervals of length h with penalty gamma per face.
///
/// EndCondition::strong_zero assembles on the C0-glued space of the given
/// degree (face terms vanish identically there) and removes the endpoint
/// rows/columns; both ends must then be strong_zero. All other conditions
/// assemble on the per-cell discontinuous space with full interior-face
/// terms: gamma [[u]][[v]] - {{u'}}[[v]] - {{v'}}[[u]].
inline Matrix sipg_laplace_1d(int degree, int cells, double h, double gamma,
                              EndCondition left, EndCondition right) {
  if (gamma <= 0.0) throw std::invalid_argument("sipg_laplace_1d: gamma <= 0");
  if (cells < 1) throw std::invalid_argument("sipg_laplace_1d: cells < 1");
  const Basis1D basis = Basis1D::gauss_lobatto(degree);
  const int nb = basis.size();
  const Matrix kcell = detail::cell_stiffness(basis, h);

  if (left == EndCondition::strong_zero || right == EndCondition::strong_zero) {
    if (left != right)
      throw std::invalid_argument("sipg_laplace_1d: mixed strong_zero ends");
    // Continuous glue: global node e*degree + a, endpoints eliminated.
    const int n_full = cells * degree + 1;
    Matrix full = Matrix::Zero(n_full, n_full);
    for (int e = 0; e < cells; ++e)
      for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
          full(e * degree + a, e * degree + b) += kcell(a, b);
    return full.block(1, 1, n_full - 2, n_full - 2);
  }

  const int n = cells * nb;
  Matrix mat = Matrix::Zero(n, n);
  for (int e = 0; e < cells; ++e)
    mat.block(e * nb, e * nb, nb, nb) += kcell;

  // Trace values and physical derivatives at the cell endpoints.
  Vector v0(nb), v1(nb), d0(nb), d1(nb);
  for (int a = 0; a < nb; ++a) {
    v0[a] = basis.value(a, 0.0);
    v1[a] = basis.value(a, 1.0);
    d0[a] = basis.derivative(a, 0.0) / h;
    d1[a] = basis.derivative(a, 1.0) / h;
  }

  // Interior faces between cells e and e+1. Jump = left - right trace,
  // average derivative = (left + right)/2.
  for (int e = 0; e + 1 < cells; ++e) {
    const int L = e * nb, R = (e + 1) * nb;
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) {
        // test trace/deriv: (i from left: v1,d1) (i from right: -v0,d0)
        // penalty gamma [[u]][[v]]
        mat(L + i, L + j) += gamma * v1[i] * v1[j];
        mat(L + i, R + j) -= gamma * v1[i] * v0[j];
        mat(R + i, L + j) -= gamma * v0[i] * v1[j];
        mat(R + i, R + j) += gamma * v0[i] * v0[j];
        // -{{u'}}[[v]]
        mat(L + i, L + j) -= 0.5 * d1[j] * v1[i];
        mat(L + i, R + j) -= 0.5 * d0[j] * v1[i];
        mat(R + i, L + j) += 0.5 * d1[j] * v0[i];
        mat(R + i, R + j) += 0.5 * d0[j] * v0[i];
        // -{{v'}}[[u]]
        mat(L + i, L + j) -= 0.5 * d1[i] * v1[j];
        mat(R + i, L + j) -= 0.5 * d0[i] * v1[j];
        mat(L + i, R + j) += 0.5 * d1[i] * v0[j];
        mat(R + i, R + j) += 0.5 * d0[i] * v0[j];
      }
  }

  // End terms with outward-normal derivative; weights (2g,1) on the domain
  // boundary, (g,1/2) when the end face is interior to the global mesh.
  auto add_end = [&](EndCondition ec, int block, const Vector& tv,
                     const Vector& td, double normal) {
    double wp = 0.0, wc = 0.0;
    if (ec == EndCondition::nitsche) {
      wp = 2.0 * gamma;
      wc = 1.0;
    } else if (ec == EndCondition::interior_face) {
      wp = gamma;
      wc = 0.5;
    } else {
      return;
    }
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        mat(block + i, block + j) += wp * tv[i] * tv[j] -
                                     wc * normal * td[j] * tv[i] -
                                     wc * normal * td[i] * tv[j];
  };
  add_end(left, 0, v0, d0, -1.0);
  add_end(right, (cells - 1) * nb, v1, d1, +1.0);
  return mat;
}

inline Matrix sipg_laplace_1d(int degree, int cells, double h, double gamma,
                              SipgBoundary bc) {
  switch (bc) {
    case SipgBoundary::strong_zero:
      return sipg_laplace_1d(degree, cells, h, gamma, EndCondition::strong_zero,
                             EndCondition::strong_zero);
    case SipgBoundary::weak_nitsche:
      return sipg_laplace_1d(degree, cells, h, gamma, EndCondition::nitsche,
                             EndCondition::nitsche);
    default:
      return sipg_laplace_1d(degree, cells, h, gamma, EndCondition::none,
                             EndCondition::none);
  }
}

/// Block-diagonal mass matrix of a discontinuous space on `cells` intervals.
inline Matrix mass_matrix_dg(const Basis1D& ansatz, const Basis1D& test,
                             int cells, double h) {
  const Matrix m = mass_matrix_1d(ansatz, test, h);
  Matrix full = Matrix::Zero(cells * m.rows(), cells * m.cols());
  for (int e = 0; e < cells; ++e)
    full.block(e * m.rows(), e * m.cols(), m.rows(), m.cols()) = m;
  return full;
}

/// Mass matrix of the C0-glued space of the given degree, endpoint
/// rows/columns removed when drop_ends is set.
inline Matrix mass_matrix_c0(int degree, int cells, double h, bool drop_ends) {
  const Basis1D basis = Basis1D::gauss_lobatto(degree);
  const Matrix m = mass_matrix_1d(basis, basis, h);
  const int n_full = cells * degree + 1;
  Matrix full = Matrix::Zero(n_full, n_full);
  for (int e = 0; e < cells; ++e)
    for (int a = 0; a < basis.size(); ++a)
      for (int b = 0; b < basis.size(); ++b)
        full(e * degree + a, e * degree + b) += m(a, b);
  if (!drop_ends) return full;
  return full.block(1, 1, n_full - 2, n_full - 2);
}

/// Divergence coupling on `cells` intervals: discontinuous pressure test of
/// degree k against the C0-glued velocity space of degree k+1, endpoint
/// columns removed when drop_ends is set.
inline Matrix derivative_matrix_c0(int pressure_degree, int cells,
                                   bool drop_ends) {
  const Basis1D pressure = Basis1D::gauss_lobatto(pressure_degree);
  const Basis1D velocity = Basis1D::gauss_lobatto(pressure_degree + 1);
  const Matrix d = derivative_matrix_1d(pressure, velocity);
  const int pdeg = velocity.degree();
  const int rows = cells * pressure.size();
  const int cols_full = cells * pdeg + 1;
  Matrix full = Matrix::Zero(rows, cols_full);
  for (int e = 0; e < cells; ++e)
    for (int i = 0; i < pressure.size(); ++i)
      for (int b = 0; b < velocity.size(); ++b)
        full(e * pressure.size() + i, e * pdeg + b) += d(i, b);
  if (!drop_ends) return full;
  return full.block(0, 1, rows, cols_full - 2);
}

enum class Continuity { continuous, discontinuous };

/// Two-child refinement embedding: expresses each coarse basis function on
/// one interval exactly in the basis of its two children. Rows are the fine
/// coefficients (glued at the shared node for continuous spaces).
inline Matrix embedding_1d(int degree, Continuity continuity) {
  if (degree < 0) throw std::invalid_argument("embedding_1d: negative degree");
  const Basis1D basis = Basis1D::gauss_lobatto(degree);
  const int nb = basis.size();
  if (continuity == Continuity::continuous) {
    const int rows = 2 * degree + 1;
    Matrix e = Matrix::Zero(rows, nb);
    for (int a = 0; a <= degree; ++a)
      for (int j = 0; j < nb; ++j) {
        e(a, j) = basis.value(j, 0.5 * basis.nodes()[a]);
        e(degree + a, j) = basis.value(j, 0.5 * (1.0 + basis.nodes()[a]));
      }
    return e;
  }
  Matrix e = Matrix::Zero(2 * nb, nb);
  for (int a = 0; a < nb; ++a)
    for (int j = 0; j < nb; ++j) {
      e(a, j) = basis.value(j, 0.5 * basis.nodes()[a]);
      e(nb + a, j) = basis.value(j, 0.5 * (1.0 + basis.nodes()[a]));
    }
  return e;
}

/// Default interior-penalty coefficient (k+1)(k+2)/h for RT_k on mesh size h.
inline double default_penalty(int k, double h) {
  return (k + 1) * (k + 2) / h;
}

}  // namespace stokesmg
