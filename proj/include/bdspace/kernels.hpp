// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file kernels.hpp
 * @brief Reproducing kernels of the Fock / Dirichlet / generalized spaces,
 * Landau-level kernels, spectral projectors and the magnetic heat kernel.
 *
 * Normalisation: every kernel here carries the prefactor nu/pi, the value
 * for which the Fock projection is idempotent on L^2(C, e^{-nu|z|^2}).
 */

#pragma once

#include <complex>
#include <utility>

#include "bdspace/quadrature.hpp"
#include "bdspace/spaces.hpp"
#include "bdspace/specfun.hpp"

namespace bds::kernels {

using cplx = std::complex<double>;
using spaces::PlaneFunction;
using spaces::PowerSeries;
using spaces::SpaceParams;

enum class Method { ClosedForm, SeriesTruncation };

const char* to_string(Method m);

struct KernelValue {
  cplx value{};
  Method method = Method::ClosedForm;
  int terms = 0;          // series terms used (0 for a pure closed form)
  double residual = 0.0;  // truncation estimate, >= 0
};

/// Closed form:
///   m = 0:  (nu/pi) e^{nu z wbar}
///   m >= 1: (nu/pi) { sum_{j<m} (nu z wbar)^j / j!
///                      + (z wbar)^m / (m!)^2 2F2(1,1;m+1,m+1; nu z wbar) }
KernelValue reproducing_kernel(const SpaceParams& p, cplx z, cplx w, const specfun::SeriesControl& ctl = {});

/// sum_{j < J} psi_j(z) conj(psi_j(w)) with a fixed number of terms. The
/// residual is a ratio-test bound on the omitted tail (infinite when the
/// term ratio has not yet dropped below one).
KernelValue reproducing_kernel_series(const SpaceParams& p, cplx z, cplx w, int J);

/// Same sum, truncated once the tail bound falls below rel_tol |sum|.
/// Throws TruncationError if max_terms is reached first.
KernelValue reproducing_kernel_series_adaptive(const SpaceParams& p, cplx z, cplx w, double rel_tol = 1e-17,
                                               int max_terms = 20000);

/// <f, K(., w)> computed from coefficients, and f(w).
std::pair<cplx, cplx> reproducing_property_check(const SpaceParams& p, const PowerSeries& f, cplx w);

/// (nu/pi) e^{nu z wbar} L_ell(nu |z - w|^2).
cplx landau_kernel(double nu, int ell, cplx z, cplx w);

/// int phi(w) K_ell(z, w) e^{-nu|w|^2} dlambda(w) on the planar rule.
cplx landau_projector_apply(double nu, int ell, const PlaneFunction& phi, const quad::PlanarRule& rule, cplx z);

/// 0 for lambda < 0, else (nu/pi) e^{nu z wbar} L^{(1)}_{floor(lambda)}(nu |z - w|^2).
cplx spectral_projector_kernel(double nu, double lambda, cplx z, cplx w);

/// Heat kernel of the magnetic Laplacian (spectrum nu k, k >= 0):
///   closed  (nu/pi) e^{nu z wbar} / (1-q) exp(-nu|z-w|^2 q/(1-q)),  q = e^{-nu t}
///   series  (nu/pi) e^{nu z wbar} sum_k q^k L_k(nu |z-w|^2)
/// The series residual is the bound e^{x/2} q^{K+1} / (1-q) on the omitted
/// tail (|L_k(x)| <= e^{x/2}), scaled by the prefactor.
KernelValue heat_kernel(double nu, double t, cplx z, cplx w, Method method = Method::ClosedForm, int max_terms = 100000);

}  // namespace bds::kernels
