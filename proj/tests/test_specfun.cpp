// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdspace/quadrature.hpp"
#include "bdspace/specfun.hpp"
#include "oracles.hpp"

using namespace bds;
using namespace bds::specfun;

TEST_CASE("hermite low degrees") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(1, 3.0) == doctest::Approx(6.0));
  CHECK(hermite(2, 1.5) == doctest::Approx(7.0));
  // H_5 = 32x^5 - 160x^3 + 120x
  CHECK(hermite(5, 1.0) == doctest::Approx(32.0 - 160.0 + 120.0));
}

TEST_CASE("hermite and laguerre match explicit expansions") {
  for (int n = 0; n <= 5; ++n) {
    for (double x : {-2.3, -0.7, 0.0, 0.4, 1.9, 3.1}) {
      double want = static_cast<double>(oracle::hermite_explicit(n, x));
      CHECK(std::abs(hermite(n, x) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
      for (double a : {0.0, 1.0, 0.5}) {
        double lw = static_cast<double>(oracle::laguerre_explicit(n, a, std::abs(x)));
        CHECK(std::abs(laguerre(n, a, std::abs(x)) - lw) <= 1e-13 * std::max(1.0, std::abs(lw)));
      }
    }
  }
  cplx z(0.3, -0.8);
  for (int n = 0; n <= 5; ++n) {
    auto want = oracle::hermite_explicit(n, oracle::cld(0.3L, -0.8L));
    CHECK(oracle::rel_err(hermite(n, z), {double(want.real()), double(want.imag())}) < 1e-13);
  }
}

TEST_CASE("hermite overflow is reported") { CHECK_THROWS_AS(hermite(400, 50.0), OverflowError); }

TEST_CASE("orthonormal hermite functions") {
  CHECK(hermite_orthonormal(0, 0.0) == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));
  CHECK(hermite_orthonormal(1, 1.0) == doctest::Approx(std::sqrt(2.0) * std::pow(kPi, -0.25)).epsilon(1e-15));
  for (int j = 0; j <= 8; ++j) {
    CHECK(hermite_orthonormal(j, 0.77) == doctest::Approx(double(oracle::hermite_function(j, 0.77L))).epsilon(1e-13));
  }
  auto rule = quad::make_rule(quad::RuleSpec::hermite(), 64);
  double worst = 0;
  for (int j = 0; j <= 15; ++j) {
    for (int k = 0; k <= 15; ++k) {
      double v = quad::integrate_line(rule, [&](double x) { return hermite_orthonormal(j, x) * hermite_orthonormal(k, x); });
      worst = std::max(worst, std::abs(v - (j == k ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-10);
  // |phi_k(x)| e^{-x^2/2} stays bounded for large k.
  double big = 0;
  for (int k = 0; k <= 200; ++k) {
    for (double x = -3; x <= 3; x += 0.05) big = std::max(big, std::abs(hermite_orthonormal(k, x)) * std::exp(-x * x / 2));
  }
  CHECK(big <= 2.0);
  double all[30];
  hermite_orthonormal_all(30, 1.3, all);
  for (int j = 0; j < 30; ++j) CHECK(all[j] == doctest::Approx(hermite_orthonormal(j, 1.3)).epsilon(1e-14));
}

TEST_CASE("laguerre values and sum identity") {
  CHECK(laguerre(0, 0, 5.3) == 1.0);
  CHECK(laguerre(7, 0, 0) == doctest::Approx(1.0));
  CHECK(laguerre(1, 0, 2.0) == doctest::Approx(-1.0));
  auto [l0, r0] = laguerre_sum_identity(0, 0, 1.7);
  CHECK(l0 == 1.0);
  CHECK(r0 == 1.0);
  for (int k = 0; k <= 20; ++k) {
    for (double a : {0.0, 1.0}) {
      for (double x : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        auto [lhs, rhs] = laguerre_sum_identity(k, a, x);
        // independent rhs: explicit expansion in long double
        double rhs_oracle = static_cast<double>(oracle::laguerre_explicit(k, a + 1, x));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(rhs)));
        CHECK(std::abs(rhs - rhs_oracle) <= 1e-10 * (1 + std::abs(rhs_oracle)));
      }
    }
  }
}

TEST_CASE("gamma family") {
  CHECK(specfun::gamma(1.5) == doctest::Approx(std::sqrt(kPi) / 2).epsilon(1e-15));
  CHECK(specfun::gamma(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(beta(1.5, 1.5) == doctest::Approx(kPi / 8).epsilon(1e-15));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(beta(-1.0, 2.0), DomainError);
  CHECK(log_factorial(170) == doctest::Approx(std::lgamma(171.0)).epsilon(1e-15));
}

TEST_CASE("hyp1f1") {
  CHECK(hyp1f1(2, 2, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(hyp1f1(1.5, 3, 0.0) == 1.0);
  CHECK_THROWS_AS(hyp1f1(1.0, -2.0, 1.0), DomainError);
  SeriesControl tight;
  tight.max_terms = 3;
  CHECK_THROWS_AS(hyp1f1(1.5, 3, 10.0, tight), TruncationError);
  // Euler integral oracle, also through the library's Gauss-Jacobi rule.
  auto gj = quad::make_rule(quad::RuleSpec::jacobi(0.5, 0.5, 0.0, 1.0), 64);
  for (double t = 0; t <= 20.0; t += 0.5) {
    double series = hyp1f1(1.5, 3, t);
    double integral = static_cast<double>(oracle::hyp1f1_integral(1.5L, 3.0L, t));
    CHECK(std::abs(series - integral) <= 1e-9 * std::abs(integral));
    double gjv = quad::integrate_line(gj, [&](double u) { return std::exp(t * u); }) / beta(1.5, 1.5);
    CHECK(std::abs(series - gjv) <= 1e-10 * std::abs(gjv));
  }
}

TEST_CASE("hyp2f2_11") {
  CHECK(hyp2f2_11(2, 0.0) == 1.0);
  double want = static_cast<double>(oracle::hyp2f2_11_brute(2, 1, 60).real());
  CHECK(hyp2f2_11(2, 1.0) == doctest::Approx(want).epsilon(1e-15));
  // alternating: error bounded by the first omitted term
  double alt = static_cast<double>(oracle::hyp2f2_11_brute(3, -2.5, 60).real());
  CHECK(std::abs(hyp2f2_11(3, -2.5) - alt) <= 1e-15 * std::max(1.0, std::abs(alt)) + 1e-16);
  cplx z(1.2, -3.4);
  auto wz = oracle::hyp2f2_11_brute(4, oracle::cld(1.2L, -3.4L), 200);
  CHECK(oracle::rel_err(hyp2f2_11(4, z), {double(wz.real()), double(wz.imag())}) < 1e-14);
  CHECK_THROWS_AS(hyp2f2_11(0.0, 1.0), DomainError);
  SeriesControl tight;
  tight.max_terms = 2;
  CHECK_THROWS_AS(hyp2f2_11(2, 5.0, tight), TruncationError);
  SeriesControl bad;
  bad.rel_tol = 0;
  CHECK_THROWS_AS(hyp2f2_11(2, 1.0, bad), DomainError);
}

TEST_CASE("hermite generating function tail") {
  CHECK(hermite_tail_sum(0, 0.4, 0.0) == cplx(1.0));
  auto partial = [](int ell, double x, cplx s, int terms) {
    oracle::cld acc = 0, sp = 1;
    for (int k = 0; k < terms; ++k) {
      acc += oracle::hermite_explicit(k + ell, oracle::cld(x)) * sp / oracle::factorial(k);
      sp *= oracle::cld(s.real(), s.imag());
    }
    return cplx(double(acc.real()), double(acc.imag()));
  };
  CHECK(oracle::rel_err(hermite_tail_sum(1, 1.0, 0.3), partial(1, 1.0, 0.3, 40)) < 1e-12);
  CHECK(oracle::rel_err(hermite_tail_sum(2, 0.5, cplx(0.2, 0.1)), partial(2, 0.5, cplx(0.2, 0.1), 40)) < 1e-12);
  for (int ell = 0; ell <= 4; ++ell) {
    for (cplx s : {cplx(0.9, 0), cplx(-0.5, 0.6), cplx(0.1, -0.8)}) {
      CHECK(oracle::rel_err(hermite_tail_sum(ell, -0.6, s), partial(ell, -0.6, s, 60)) < 1e-10);
    }
  }
}
