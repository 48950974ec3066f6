// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file specfun.hpp
 * @brief Special functions used by the space, kernel and transform modules.
 *
 * Hermite and Laguerre polynomials by three-term recurrence, log-gamma based
 * factorials and Pochhammer symbols, and the two hypergeometric series that
 * appear in the reproducing kernels (2F2(1,1;b,b;x)) and in the closed form of
 * the m = 2 convolution weight (1F1).
 *
 * Every function here is pure; nothing touches global state, so all of it is
 * safe to call from any number of threads.
 */

#pragma once

#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>

#include "bdspace/errors.hpp"

namespace bds::specfun {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Truncation policy for the hypergeometric series.
struct SeriesControl {
  int max_terms = 2000;
  double rel_tol = 1e-17;
  double abs_tol = 1e-300;

  /// Throws DomainError unless max_terms >= 1 and both tolerances are > 0.
  void validate() const;
};

/// Kahan-Babuska (Neumaier) compensated accumulator.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if constexpr (std::is_same_v<T, cplx>) {
      comp_ += cplx(neumaier(sum_.real(), x.real(), t.real()), neumaier(sum_.imag(), x.imag(), t.imag()));
    } else {
      comp_ += neumaier(sum_, x, t);
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  static double neumaier(double s, double x, double t) {
    return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
  }
  T sum_{};
  T comp_{};
};

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// log Gamma(x) for x > 0. Thread-safe (does not touch signgam).
double log_gamma(double x);
/// Gamma(x) for x > 0.
double gamma(double x);
/// Beta(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0.
double beta(double x, double y);
/// log n!
double log_factorial(int n);
/// log (a)_k = log Gamma(a+k) - log Gamma(a), a > 0.
double log_pochhammer(double a, int k);

// ---------------------------------------------------------------------------
// Orthogonal polynomials
// ---------------------------------------------------------------------------

/// Physicists' Hermite polynomial H_n at a real or complex argument.
/// Recurrence H_{k+1} = 2x H_k - 2k H_{k-1}.
template <typename T>
T hermite_poly(int n, T x) {
  if (n < 0) throw DomainError("hermite: degree must be non-negative");
  T h0 = T(1);
  if (n == 0) return h0;
  T h1 = T(2) * x;
  for (int k = 1; k < n; ++k) {
    T h2 = T(2) * x * h1 - T(2.0 * k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// H_n(x) for real x. Throws OverflowError when the value is not finite.
double hermite(int n, double x);
/// H_n(x) for complex x, same recurrence as the real case.
cplx hermite(int n, cplx x);

/// phi_j(x) = pi^{-1/4} (2^j j!)^{-1/2} H_j(x), orthonormal against e^{-x^2}.
/// Uses the normalized recurrence, so large j does not overflow.
double hermite_orthonormal(int j, double x);

/// Fills out[0..n) with phi_0(x)..phi_{n-1}(x).
void hermite_orthonormal_all(int n, double x, double* out);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x).
double laguerre(int n, double alpha, double x);

/// Both sides of sum_{j<=k} L_j^{(alpha)}(x) = L_k^{(alpha+1)}(x).
std::pair<double, double> laguerre_sum_identity(int k, double alpha, double x);

// ---------------------------------------------------------------------------
// Hypergeometric series
// ---------------------------------------------------------------------------

/// Result of a truncated series: value plus the number of terms used and the
/// magnitude of the last term added.
template <typename T>
struct SeriesValue {
  T value{};
  int terms = 0;
  double last_term = 0.0;
};

/// Confluent hypergeometric 1F1(alpha; beta; t) by the ascending series with
/// compensated summation. Throws DomainError when beta is a non-positive
/// integer and TruncationError when max_terms is exhausted.
SeriesValue<double> hyp1f1_series(double alpha, double beta, double t, const SeriesControl& ctl = {});
double hyp1f1(double alpha, double beta, double t, const SeriesControl& ctl = {});

/// 2F2(1,1;b,b;x) = sum_k (k!/(b)_k)^2 x^k / k!, for b > 0.
SeriesValue<cplx> hyp2f2_11_series(double b, cplx x, const SeriesControl& ctl = {});
double hyp2f2_11(double b, double x, const SeriesControl& ctl = {});
cplx hyp2f2_11(double b, cplx x, const SeriesControl& ctl = {});

/// Closed form of sum_k H_{k+ell}(x) s^k / k! = exp(2xs - s^2) H_ell(x - s).
cplx hermite_tail_sum(int ell, double x, cplx s);

}  // namespace bds::specfun
