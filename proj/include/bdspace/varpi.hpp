// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file varpi.hpp
 * @brief The iterated convolution weight
 *   varpi_m = (sqrt(t) e^{-t}) * (sqrt(t) e^{-2t}) * ... * (sqrt(t) e^{-mt}).
 *
 * Internally varpi_m(t) = t^{(3m-2)/2} e^{-t} F_m(t) with F_1 = 1 and
 *   F_k(t) = int_0^1 u^{(3k-5)/2} (1-u)^{1/2} F_{k-1}(tu) e^{-(k-1)t(1-u)} du,
 * which is smooth and bounded by B(3/2,3/2)^{k-1}. Each F_k is tabulated on
 * dyadic panels with Chebyshev nodes (barycentric interpolation), so the
 * next level costs one Gauss-Jacobi rule per point.
 */

#pragma once

#include <vector>

#include "bdspace/quadrature.hpp"

namespace bds::varpi {

/// Tabulated F_2..F_m for one m >= 1. Immutable after construction.
class VarpiTable {
 public:
  /// Throws DomainError for m < 1, panel_nodes < 4 or quad_nodes < 8. With
  /// tabulate_top false only F_2..F_{m-1} are tabulated and F_m is always
  /// computed by quadrature.
  explicit VarpiTable(int m, int panel_nodes = 28, int quad_nodes = 64, double t_max = 1024.0,
                      bool tabulate_top = true);

  int m() const noexcept { return m_; }
  double t_max() const noexcept { return t_max_; }

  /// F_m(t); beyond t_max falls back to direct quadrature.
  double smooth_factor(double t) const;
  /// varpi_m(t). Throws DomainError for t < 0.
  double operator()(double t) const;
  /// F_m(t) by quadrature over the tabulated F_{m-1}, bypassing the top table.
  double smooth_factor_direct(double t) const;

  /// Interpolation grid of the top level and varpi_m on it.
  std::vector<double> grid() const;
  std::vector<double> values() const;

 private:
  struct Panel {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> x;  // Chebyshev nodes, increasing
    std::vector<double> f;  // F at the nodes
    std::vector<double> w;  // barycentric weights
  };

  double F(int k, double t) const;
  double F_direct(int k, double t) const;
  double interpolate(int k, double t) const;

  int m_;
  double t_max_;
  std::vector<std::vector<Panel>> levels_;        // levels_[k] for k = 2..m
  std::vector<quad::QuadratureRule> jacobi_;      // u-rule per level
  std::vector<quad::QuadratureRule> laguerre_;    // v-rule per level (large t)
};

/// varpi_m(t), m >= 1 (varpi_1(t) = sqrt(t) e^{-t}). Builds the tables of the
/// lower levels on each call; reuse a VarpiTable for repeated evaluation.
double varpi(int m, double t);

/// (pi/8) t^2 e^{-2t} 1F1(3/2; 3; t).
double varpi2_closed(double t);

/// B(3/2,3/2)^{m-1} t^{(3m-2)/2} e^{-t}.
double varpi_bound(int m, double t);

struct LaplaceValue {
  double numeric = 0.0;
  double closed = 0.0;
  double error_estimate = 0.0;  // |I_n - I_{2n}| of the Gauss-Laguerre value
};

/// int_0^inf e^{-kt} varpi_m(t) dt by Gauss-Laguerre (alpha = (3m-2)/2)
/// against Gamma(3/2)^m / [(k+1)...(k+m)]^{3/2}.
LaplaceValue varpi_laplace(const VarpiTable& table, double k, int nodes = 64);
LaplaceValue varpi_laplace(int m, double k, int nodes = 64);

}  // namespace bds::varpi
