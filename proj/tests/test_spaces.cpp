// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bdspace/spaces.hpp"
#include "bdspace/specfun.hpp"
#include "oracles.hpp"

using namespace bds;
using namespace bds::spaces;
using bds::specfun::kPi;

namespace {
double fact(int n) { return double(oracle::factorial(n)); }
}  // namespace

TEST_CASE("monomial norms") {
  for (double nu : {0.5, 1.0, 2.0, 3.7}) {
    CHECK(monomial_norm_sq({nu, 1}, 0) == doctest::Approx(kPi / nu).epsilon(1e-14));
    CHECK(monomial_norm_sq({nu, 0}, 4) == doctest::Approx(kPi * 24 / std::pow(nu, 5)).epsilon(1e-13));
    for (int m = 2; m <= 4; ++m) {
      CHECK(monomial_norm_sq({nu, m}, m) == doctest::Approx(kPi * fact(m) * fact(m) / nu).epsilon(1e-13));
      CHECK(monomial_norm_sq({nu, m}, m - 1) == doctest::Approx(kPi * fact(m - 1) / std::pow(nu, m)).epsilon(1e-13));
    }
  }
  CHECK(monomial_norm_sq({1.0, 1}, 2) == doctest::Approx(4 * kPi).epsilon(1e-14));
  // j * j!/nu^j = ||e_j||^2 / pi for m = 1
  for (int j = 1; j <= 60; ++j) {
    SpaceParams p{1.7, 1};
    CHECK(std::abs(log_membership_weight(p, j) - (log_monomial_norm_sq(p, j) - std::log(kPi))) <= 1e-12 * (1 + j));
  }
  CHECK(std::isfinite(log_monomial_norm_sq({1.0, 2}, 400)));
  CHECK_THROWS_AS(monomial_norm_sq({0.0, 1}, 1), DomainError);
  CHECK_THROWS_AS(monomial_norm_sq({1.0, -1}, 1), DomainError);
}

TEST_CASE("basis functions") {
  const cplx z(0.7, -1.1);
  CHECK(std::abs(basis_eval({2.0, 1}, 0, z) - std::sqrt(2.0 / kPi)) < 1e-15);
  CHECK(std::abs(basis_eval({1.5, 2}, 1, z) - 1.5 / std::sqrt(kPi) * z) < 1e-14);
  for (int m = 0; m <= 3; ++m) {
    for (int j = 0; j <= 10; ++j) {
      SpaceParams p{1.3, m};
      double lhs = std::norm(basis_eval(p, j, z)) * monomial_norm_sq(p, j);
      CHECK(lhs == doctest::Approx(std::pow(std::abs(z), 2 * j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("orthonormality under planar quadrature") {
  for (int m = 0; m <= 3; ++m) {
    SpaceParams p{1.0, m};
    quad::PlanarRule rule(p.nu, 48, 64);
    double worst = 0;
    for (int j = 0; j <= 12; ++j) {
      for (int k = 0; k <= 12; ++k) {
        auto ej = PowerSeries::monomial(j, 1.0 / std::sqrt(monomial_norm_sq(p, j)));
        auto ek = PowerSeries::monomial(k, 1.0 / std::sqrt(monomial_norm_sq(p, k)));
        worst = std::max(worst, std::abs(inner_product_quadrature(p, ej, ek, rule) - (j == k ? 1.0 : 0.0)));
      }
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("inner products") {
  for (double nu : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(inner_product({nu, 1}, PowerSeries::monomial(0), PowerSeries::monomial(0)) - kPi / nu) < 1e-14);
    CHECK(inner_product({nu, 2}, PowerSeries::monomial(1), PowerSeries::monomial(2)) == cplx(0));
    for (int m = 1; m <= 3; ++m) {
      SpaceParams p{nu, m};
      auto em = PowerSeries::monomial(m);
      cplx q = inner_product_quadrature(p, em, em, quad::PlanarRule(nu));
      CHECK(std::abs(q - kPi * fact(m) * fact(m) / nu) <= 1e-10 * std::abs(q));
      CHECK(std::abs(inner_product(p, em, em) - q) <= 1e-10 * std::abs(q));
    }
  }
  std::mt19937_64 gen(11);
  std::normal_distribution<double> N;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> a(9), b(9);
    for (auto& c : a) c = {N(gen), N(gen)};
    for (auto& c : b) c = {N(gen), N(gen)};
    for (int m = 0; m <= 3; ++m) {
      SpaceParams p{0.5 + 0.25 * trial, m};
      cplx exact = inner_product(p, PowerSeries(a), PowerSeries(b));
      cplx numer = inner_product_quadrature(p, PowerSeries(a), PowerSeries(b), quad::PlanarRule(p.nu));
      CHECK(std::abs(exact - numer) <= 1e-9 * std::abs(exact));
    }
  }
}

TEST_CASE("power series basics") {
  PowerSeries f({1.0, cplx(0, 2), 3.0});
  CHECK(std::abs(f(cplx(1, 1)) - (1.0 + cplx(0, 2) * cplx(1, 1) + 3.0 * cplx(0, 2))) < 1e-15);
  CHECK(f.derivative(1).coefficients() == std::vector<cplx>{cplx(0, 2), 6.0});
  CHECK(f.derivative(5).degree() == 0);
  auto g = PowerSeries::from_json(f.to_json());
  CHECK(g.coefficients() == f.coefficients());
  CHECK(PowerSeries::from_json("[1, 2.5]").coeff(1) == cplx(2.5));
  CHECK_THROWS_AS(PowerSeries::from_json("{\"a\":1}"), DomainError);
  CHECK_THROWS_AS(PowerSeries::from_json("[[1,2,3]]"), DomainError);
  CHECK_THROWS_AS(PowerSeries::from_json("[1,"), DomainError);
}

TEST_CASE("split series") {
  PowerSeries f({1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  auto [f1, f2] = split_series(f, 2);
  CHECK(f1.coefficients() == std::vector<cplx>{1.0, 2.0});
  CHECK(f2.coefficients() == std::vector<cplx>{0.0, 0.0, 3.0, 4.0, 5.0, 6.0});
  auto [g1, g2] = split_series(PowerSeries({7.0}), 3);
  CHECK(g1.coefficients() == std::vector<cplx>{7.0});
  CHECK(g2.coefficients() == std::vector<cplx>{0.0});
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int i = 0; i < 10; ++i) {
    cplx z(U(gen), U(gen));
    CHECK(std::abs(f1(z) + f2(z) - f(z)) <= 1e-13 * std::abs(f(z)));
  }
  CHECK_THROWS_AS(split_series(f, 0), DomainError);
}

TEST_CASE("membership test") {
  const double nu = 1.5;
  std::vector<cplx> expo(60), phi(60);
  for (int j = 0; j < 60; ++j) {
    expo[j] = std::pow(nu, j) / fact(j);
    phi[j] = std::sqrt(std::pow(nu, j + 1) / fact(j + 2));
  }
  auto ve = membership_test({nu, 1}, PowerSeries(expo));
  CHECK(ve.classification == MembershipClass::ConvergentEvidence);
  auto vf = membership_test({nu, 1}, PowerSeries::monomial(3));
  CHECK(vf.classification == MembershipClass::ConvergentEvidence);
  CHECK(vf.weighted_tail_sums.back() == doctest::Approx(3 * 6 / std::pow(nu, 3)));
  // phi_nu: terms ~ nu / j in the Dirichlet space, constant for m = 2.
  auto vp = membership_test({nu, 1}, PowerSeries(phi));
  CHECK(vp.classification == MembershipClass::DivergentEvidence);
  CHECK(vp.ratio_estimate > 0.95);  // d'Alembert alone cannot decide here
  auto vp2 = membership_test({nu, 2}, PowerSeries(phi));
  CHECK(vp2.classification == MembershipClass::DivergentEvidence);
  // phi_nu lies in the Fock space
  CHECK(membership_test({nu, 0}, PowerSeries(phi)).classification == MembershipClass::ConvergentEvidence);
  // 1/j^2 weighted terms: convergent by Bertrand
  std::vector<cplx> sq(80);
  for (int j = 1; j < 80; ++j) sq[j] = std::sqrt(std::exp(-log_membership_weight({1.0, 1}, j)) / (double(j) * j));
  CHECK(membership_test({1.0, 1}, PowerSeries(sq), 30).classification == MembershipClass::ConvergentEvidence);
  for (const auto* v : {&ve, &vp, &vp2}) {
    for (std::size_t i = 1; i < v->weighted_tail_sums.size(); ++i) {
      CHECK(v->weighted_tail_sums[i] >= v->weighted_tail_sums[i - 1]);
    }
  }
}

TEST_CASE("magnetic Laplacian") {
  auto z3 = [](cplx z) { return z * z * z; };
  CHECK(std::abs(magnetic_laplacian_fd(1.0, z3, cplx(0.4, 0.3))) <= 1e-7);
  CHECK(std::abs(magnetic_laplacian_fd(1.0, [](cplx z) { return std::conj(z); }, cplx(1, 1)) - cplx(1, -1)) <= 1e-8);
  CHECK(std::abs(magnetic_laplacian_fd(2.0, [](cplx z) { return z * std::conj(z); }, 1.0) - 1.0) <= 1e-6);
  // holomorphic polynomials lie in the null space
  std::mt19937_64 gen(5);
  std::normal_distribution<double> N;
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  const double h = 1e-3;
  for (int deg = 0; deg <= 6; ++deg) {
    std::vector<cplx> a(deg + 1);
    for (auto& c : a) c = {N(gen), N(gen)};
    PowerSeries P(a);
    auto d2 = P.derivative(2);
    for (int i = 0; i < 20; ++i) {
      cplx z(U(gen), U(gen));
      double scale = std::max(1.0, std::abs(d2(z)) + std::abs(P(z)));
      CHECK(std::abs(magnetic_laplacian_fd(1.3, [&](cplx w) { return P(w); }, z, h)) <= 10 * h * h * scale);
    }
  }
  CHECK_THROWS_AS(magnetic_laplacian_fd(1.0, [](cplx z) { return 1.0 / (z - z); }, 0.5), EvaluationError);
  CHECK_THROWS_AS(magnetic_laplacian_fd(1.0, z3, 0.5, 0.0), DomainError);
}

TEST_CASE("scale intertwiner") {
  for (double nu : {0.5, 2.0, 3.0}) {
    PlaneFunction zbar = [](cplx z) { return std::conj(z); };
    auto T = scale_intertwiner(nu, zbar);
    const cplx w(1, 0.5);
    const double h = 1e-3;
    cplx lhs = magnetic_laplacian_fd(1.0, T, w, h);
    PlaneFunction lap = [&](cplx z) { return magnetic_laplacian_fd(nu, zbar, z, h); };
    cplx rhs = scale_intertwiner(nu, lap)(w) / nu;
    CHECK(std::abs(lhs - rhs) <= 5e-6);
    auto one = scale_intertwiner(nu, [](cplx) { return cplx(1); });
    CHECK(std::abs(one(w) - 1 / std::sqrt(nu)) < 1e-15);
    CHECK(std::abs(magnetic_laplacian_fd(1.0, one, w, h)) <= 1e-8);
    // isometry between the nu and unit Gaussian measures
    PlaneFunction z2 = [](cplx z) { return z * z; };
    auto Tz2 = scale_intertwiner(nu, z2);
    cplx a = quad::integrate_plane(quad::PlanarRule(1.0), [&](cplx z) { return cplx(std::norm(Tz2(z))); });
    cplx b = quad::integrate_plane(quad::PlanarRule(nu), [&](cplx z) { return cplx(std::norm(z2(z))); });
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
  }
}
