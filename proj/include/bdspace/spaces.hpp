// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spaces.hpp
 * @brief The Fock (m = 0), Dirichlet (m = 1) and generalized (m >= 2)
 * spaces of entire functions: monomial norms, orthonormal bases, inner
 * products, the membership test and the magnetic Laplacian.
 *
 * Norm of f = f_1 + f_2 (f_1 the degree < m part):
 *   ||f||^2 = int |f_1|^2 e^{-nu|z|^2} + int |f_2^{(m)}|^2 e^{-nu|z|^2}.
 */

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bdspace/errors.hpp"
#include "bdspace/quadrature.hpp"

namespace bds::spaces {

using cplx = std::complex<double>;
using PlaneFunction = std::function<cplx(cplx)>;

struct SpaceParams {
  double nu = 1.0;
  int m = 1;

  /// Throws DomainError unless nu > 0 and m >= 0.
  void validate() const;
};

/// Finite power series a_0 + a_1 z + ... + a_J z^J.
class PowerSeries {
 public:
  PowerSeries() : coeffs_{cplx(0)} {}
  explicit PowerSeries(std::vector<cplx> coeffs);

  /// The monomial z^j.
  static PowerSeries monomial(int j, cplx c = 1.0);

  const std::vector<cplx>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  cplx coeff(int j) const noexcept { return j >= 0 && j <= degree() ? coeffs_[j] : cplx(0); }

  /// Horner evaluation.
  cplx operator()(cplx z) const;
  /// k-th complex derivative.
  PowerSeries derivative(int k = 1) const;

  /// JSON array of [re, im] pairs.
  std::string to_json() const;
  /// Parses a JSON array of [re, im] pairs or of plain reals. Throws
  /// DomainError on malformed input.
  static PowerSeries from_json(const std::string& text);

 private:
  std::vector<cplx> coeffs_;
};

/// log ||z^j||^2_{nu,m}.
double log_monomial_norm_sq(const SpaceParams& p, int j);
/// ||z^j||^2_{nu,m}.
double monomial_norm_sq(const SpaceParams& p, int j);

/// Orthonormal basis function z^j / ||z^j||.
cplx basis_eval(const SpaceParams& p, int j, cplx z);

/// Coefficient form sum_j a_j conj(b_j) ||z^j||^2 (exact for finite series).
cplx inner_product(const SpaceParams& p, const PowerSeries& f, const PowerSeries& g);

/// Same inner product computed from the integral definition on a planar rule.
cplx inner_product_quadrature(const SpaceParams& p, const PowerSeries& f, const PowerSeries& g,
                              const quad::PlanarRule& rule);

/// (f_1, f_2): coefficients below m, and the rest with the low slots zeroed.
std::pair<PowerSeries, PowerSeries> split_series(const PowerSeries& f, int m);

enum class MembershipClass { ConvergentEvidence, DivergentEvidence, Inconclusive };

const char* to_string(MembershipClass c);

struct MembershipVerdict {
  std::vector<double> weighted_tail_sums;  // partial sums of |a_j|^2 weight_j
  MembershipClass classification = MembershipClass::Inconclusive;
  double ratio_estimate = 0.0;   // mean d'Alembert ratio over the window
  double bertrand_estimate = 0.0;  // mean Bertrand statistic, used when the ratio is near 1
};

/// log of the membership weight for index j; -inf where the weight is zero
/// (the degree < m part, which never affects convergence).
///   m = 0: j!/nu^j;  m = 1: j j!/nu^j;  m >= 2: (j!)^2/(nu^{j-m} (j-m)!).
double log_membership_weight(const SpaceParams& p, int j);

/// Evidence for f lying in the space, from the weighted coefficient terms
/// t_j = |a_j|^2 weight_j over the last tail_window indices. A mean ratio
/// below 1 - eps or above 1 + eps decides; otherwise Bertrand's statistic
/// ln j (j (t_j/t_{j+1} - 1) - 1) decides with the same margin. A window
/// with no two consecutive nonzero terms counts as a finite sum.
MembershipVerdict membership_test(const SpaceParams& p, const PowerSeries& f, int tail_window = 20, double eps = 0.05);

/// -d^2F/dz dzbar + nu zbar dF/dzbar by central differences with one
/// Richardson step (h, h/2). Throws EvaluationError on a non-finite stencil
/// value and DomainError for h <= 0 or nu <= 0.
cplx magnetic_laplacian_fd(double nu, const PlaneFunction& F, cplx z, double h = 1e-4);

/// z -> nu^{-1/2} F(z / sqrt(nu)), an isometry from the nu-weighted to the
/// unit-weighted L^2 space.
PlaneFunction scale_intertwiner(double nu, PlaneFunction F);

}  // namespace bds::spaces
