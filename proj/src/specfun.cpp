// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/specfun.hpp"

#include <math.h>

#include <cmath>
#include <limits>
#include <string>

namespace bds::specfun {

void SeriesControl::validate() const {
  if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("SeriesControl: tolerances must be > 0");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double gamma(double x) { return std::exp(log_gamma(x)); }

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta: arguments must be positive");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n < 2) return 0.0;
  return log_gamma(n + 1.0);
}

double log_pochhammer(double a, int k) {
  if (k < 0) throw DomainError("log_pochhammer: negative count");
  if (k == 0) return 0.0;
  return log_gamma(a + k) - log_gamma(a);
}

double hermite(int n, double x) {
  double h = hermite_poly(n, x);
  if (!std::isfinite(h)) throw OverflowError("hermite: H_" + std::to_string(n) + " overflows double precision");
  return h;
}

cplx hermite(int n, cplx x) { return hermite_poly(n, x); }

void hermite_orthonormal_all(int n, double x, double* out) {
  if (n <= 0) return;
  // phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1}
  const double phi0 = std::pow(kPi, -0.25);
  out[0] = phi0;
  if (n == 1) return;
  out[1] = std::sqrt(2.0) * x * phi0;
  for (int k = 1; k + 1 < n; ++k) {
    out[k + 1] = std::sqrt(2.0 / (k + 1)) * x * out[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
  }
}

double hermite_orthonormal(int j, double x) {
  if (j < 0) throw DomainError("hermite_orthonormal: degree must be non-negative");
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25);
  for (int k = 0; k < j; ++k) {
    double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be non-negative");
  double l0 = 1.0;
  if (n == 0) return l0;
  double l1 = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

std::pair<double, double> laguerre_sum_identity(int k, double alpha, double x) {
  if (k < 0) throw DomainError("laguerre_sum_identity: k must be non-negative");
  CompensatedSum<double> lhs;
  double l0 = 1.0;
  double l1 = 1.0 + alpha - x;
  lhs.add(l0);
  if (k >= 1) lhs.add(l1);
  for (int j = 1; j < k; ++j) {
    double l2 = ((2.0 * j + 1.0 + alpha - x) * l1 - (j + alpha) * l0) / (j + 1.0);
    lhs.add(l2);
    l0 = l1;
    l1 = l2;
  }
  return {lhs.value(), laguerre(k, alpha + 1.0, x)};
}

namespace {

bool is_nonpositive_integer(double b) { return b <= 0.0 && std::floor(b) == b; }

// Shared driver: term_{k+1} = term_k * ratio(k). Stops once two consecutive
// terms fall below rel_tol*|sum| + abs_tol.
template <typename T, typename Ratio>
SeriesValue<T> sum_series(const char* name, Ratio ratio, const SeriesControl& ctl) {
  ctl.validate();
  CompensatedSum<T> sum;
  T term = T(1);
  sum.add(term);
  int small_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    term *= ratio(k);
    sum.add(term);
    double mag = std::abs(term);
    if (!std::isfinite(mag)) throw OverflowError(std::string(name) + ": series term overflowed");
    if (mag <= ctl.rel_tol * std::abs(sum.value()) + ctl.abs_tol) {
      if (++small_run == 2) return {sum.value(), k + 2, mag};
    } else {
      small_run = 0;
    }
  }
  throw TruncationError(std::string(name) + ": no convergence within " + std::to_string(ctl.max_terms) + " terms",
                        cplx(sum.value()), ctl.max_terms + 1);
}

}  // namespace

SeriesValue<double> hyp1f1_series(double alpha, double beta, double t, const SeriesControl& ctl) {
  if (is_nonpositive_integer(beta)) throw DomainError("hyp1f1: beta must not be a non-positive integer");
  auto ratio = [&](int k) { return (alpha + k) / (beta + k) * t / (k + 1.0); };
  return sum_series<double>("hyp1f1", ratio, ctl);
}

double hyp1f1(double alpha, double beta, double t, const SeriesControl& ctl) {
  return hyp1f1_series(alpha, beta, t, ctl).value;
}

SeriesValue<cplx> hyp2f2_11_series(double b, cplx x, const SeriesControl& ctl) {
  if (!(b > 0.0)) throw DomainError("hyp2f2_11: b must be positive");
  // (1)_k^2 / (b)_k^2 / k!  =>  ratio (k+1) x / (b+k)^2
  auto ratio = [&](int k) { return x * ((k + 1.0) / ((b + k) * (b + k))); };
  return sum_series<cplx>("hyp2f2_11", ratio, ctl);
}

double hyp2f2_11(double b, double x, const SeriesControl& ctl) { return hyp2f2_11_series(b, cplx(x), ctl).value.real(); }

cplx hyp2f2_11(double b, cplx x, const SeriesControl& ctl) { return hyp2f2_11_series(b, x, ctl).value; }

cplx hermite_tail_sum(int ell, double x, cplx s) {
  if (ell < 0) throw DomainError("hermite_tail_sum: ell must be non-negative");
  return std::exp(2.0 * x * s - s * s) * hermite_poly(ell, cplx(x) - s);
}

}  // namespace bds::specfun
