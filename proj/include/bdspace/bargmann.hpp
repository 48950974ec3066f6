// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bargmann.hpp
 * @brief Integral transforms from L^2(R) into the Fock / Dirichlet /
 * generalized spaces, their kernels by two independent routes, and the
 * isometry checks.
 *
 * With h_j(x) = phi_j(x) e^{-x^2/2} the Hermite functions and psi_j the
 * orthonormal basis of the target space, the transform sends h_j to psi_j:
 *
 *   K(z, x) = e^{-x^2/2} Kt(z, x),   Kt(z, x) = sum_j phi_j(x) psi_j(z).
 *
 * Closed route for Kt (m >= 1), with s(t) = sqrt(nu/2) e^{-t} z:
 *   sqrt(nu) pi^{-3/4} [ sum_{k<m} (sqrt(nu/2) z)^k H_k(x) / k!
 *     + (2/pi)^{m/2} z^m int_0^inf varpi_m(t) e^{2xs - s^2} H_m(x - s) dt ],
 * and for m = 0 the generating function sqrt(nu) pi^{-3/4} e^{x sqrt(2nu) z - nu z^2/2}.
 * The t-integral runs Gauss-Laguerre with alpha = (3m-2)/2 against the smooth
 * factor of varpi_m, doubling the node count until two successive values agree.
 */

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "bdspace/quadrature.hpp"
#include "bdspace/spaces.hpp"
#include "bdspace/varpi.hpp"

namespace bds::bargmann {

using cplx = std::complex<double>;
using spaces::SpaceParams;
using RealFunction = std::function<double(double)>;

enum class TransformMethod {
  BasisSeries,      // sum_j phi_j(x) psi_j(z)
  ClosedIntegral,   // generating-function form with the tabulated varpi_m
  ClosedVarpi2,     // m = 2 only: same, with varpi_2 from its 1F1 closed form
};

const char* to_string(TransformMethod m);

struct TransformKernelSpec {
  SpaceParams params;
  TransformMethod method = TransformMethod::ClosedIntegral;
  int series_terms = 0;     // BasisSeries: fixed J, or 0 for adaptive
  int t_nodes = 64;         // ClosedIntegral: starting Gauss-Laguerre size (>= 8)
  int max_t_nodes = 1024;   // upper limit of the doubling
  double rel_tol = 1e-13;   // target relative accuracy of the adaptive parts
  bool include_gaussian = false;

  /// Throws DomainError on invalid parameters.
  void validate() const;
};

struct TransformResult {
  cplx value{};
  TransformMethod method = TransformMethod::ClosedIntegral;
  int terms = 0;          // series terms or final t-node count
  double residual = 0.0;  // truncation / node-doubling estimate, >= 0
};

/// pi^{-3/4} exp(-x^2/2 + sqrt(2) x z - z^2/2).
cplx classic_kernel(cplx z, double x);

/// Holds the quadrature rules and varpi table for one kernel spec.
/// Immutable after construction; safe to share between threads.
class TransformEngine {
 public:
  explicit TransformEngine(const TransformKernelSpec& spec);

  const TransformKernelSpec& spec() const noexcept { return spec_; }

  /// K(z, x) or Kt(z, x) depending on spec().include_gaussian.
  TransformResult kernel(cplx z, double x) const;

  /// Kt(z, x_i) for every node of a Gauss-Hermite rule.
  std::vector<cplx> kernel_column(cplx z, const quad::QuadratureRule& x_rule) const;

 private:
  TransformResult series_kernel(cplx z, double x) const;
  TransformResult closed_kernel(cplx z, double x) const;
  double smooth_factor(double t) const;

  TransformKernelSpec spec_;
  std::shared_ptr<const varpi::VarpiTable> table_;
  std::vector<quad::QuadratureRule> t_rules_;  // sizes t_nodes, 2 t_nodes, ...
};

/// Kt via the Dirichlet space (m = 1) with the given spec's method and nu.
TransformResult dirichlet_kernel(double nu, cplx z, double x, TransformKernelSpec spec);
/// Kt for m >= 2.
TransformResult generalized_kernel(double nu, int m, cplx z, double x, TransformKernelSpec spec);

/// B[phi](z) = sum_i w_i Kt(z, x_i) phi(x_i) e^{x_i^2/2} on a Gauss-Hermite
/// rule. Throws DomainError for a non-Hermite rule and EvaluationError when
/// phi is not finite at a node.
cplx transform_apply(const TransformEngine& engine, const RealFunction& phi, cplx z, const quad::QuadratureRule& x_rule);

/// Same with a precomputed kernel_column.
cplx transform_apply(const std::vector<cplx>& column, const RealFunction& phi, const quad::QuadratureRule& x_rule);

/// Hermite function h_j(x) = phi_j(x) e^{-x^2/2}.
double hermite_function(int j, double x);

/// sum_j c_j h_j(x).
RealFunction hermite_expansion(std::vector<double> coeffs);

/// Cubic (modified Akima) interpolant of samples, zero outside their range.
/// Needs at least four strictly increasing abscissae.
RealFunction sampled_function(std::vector<double> x, std::vector<double> y);

/// Samples B[.] on a circle and recovers Taylor coefficients by DFT.
class CircleSampler {
 public:
  CircleSampler(const TransformEngine& engine, double radius, int points, int hermite_nodes = 80);

  /// Taylor coefficients a_0..a_{points-1} of B[phi].
  std::vector<cplx> coefficients(const RealFunction& phi) const;

  const SpaceParams& params() const noexcept { return params_; }
  int points() const noexcept { return points_; }

 private:
  SpaceParams params_;
  double radius_;
  int points_;
  quad::QuadratureRule x_rule_;
  std::vector<std::vector<cplx>> columns_;
};

struct IsometryResult {
  double input_norm = 0.0;      // sum |lambda_j|^2
  double output_norm = 0.0;     // ||sum lambda_j psi_j||^2 from exact image coefficients
  double numerical_norm = -1.0; // from sampled transform values, or -1 if not requested
};

/// Norms for phi = sum lambda_j h_j. The numerical route runs only when a
/// sampler is supplied (its points must exceed the coefficient count).
IsometryResult isometry_check(const SpaceParams& p, const std::vector<cplx>& lambda,
                              const CircleSampler* sampler = nullptr);

/// (sum_j |psi_j(z)|^2, bound):  m = 0: (nu/pi) e^{nu|z|^2} (equality);
/// m = 1: (nu + e^{nu|z|^2}) / pi;  m >= 2: (nu/pi)(1 + |z|^{2m}) e^{nu|z|^2}.
std::pair<double, double> kernel_norm_bound_check(const SpaceParams& p, cplx z);

struct DivergenceDemo {
  std::vector<double> terms;         // pi nu^m prod_{i<=m}(j+i)^2 / prod_{i<=m+2}(j+i)
  std::vector<double> partial_sums;
  std::vector<double> limit_ratios;  // term_j / (pi nu^m (j+1)^{m-2})
};

/// First J terms of the norm series of the m-th derivative of
/// phi_nu(z) = sum_j sqrt(nu^{j+1}/(j+2)!) z^j in the Fock space.
DivergenceDemo fock_derivative_divergence_demo(double nu, int m, int J);

}  // namespace bds::bargmann
