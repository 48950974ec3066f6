// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion. Each line reports the
// worst library-vs-library residual, the worst library-vs-oracle residual
// (oracles live in this file and oracles.hpp), and the wall time against its
// budget. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bdspace/bargmann.hpp"
#include "bdspace/kernels.hpp"
#include "bdspace/quadrature.hpp"
#include "bdspace/spaces.hpp"
#include "bdspace/varpi.hpp"
#include "oracles.hpp"

using namespace bds;
using cplx = std::complex<double>;
using oracle::cld;
using oracle::ld;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(const char* label, double residual, double tol) {
    const bool pass = std::isfinite(residual) && residual <= tol;
    ok = ok && pass;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.3g/%.0e%s", detail.empty() ? "" : " ", label, residual, tol, pass ? "" : "!");
    detail += buf;
  }
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
double rel(cplx a, cld b) { return rel(a, cplx(double(b.real()), double(b.imag()))); }
cld to_ld(cplx z) { return {z.real(), z.imag()}; }

ld log_norm_oracle(ld nu, int m, int j) {
  using std::log;
  const ld lf = std::lgamma(ld(j + 1));
  if (m == 0 || j < m) return log(oracle::kPiL) + lf - (j + 1) * log(nu);
  return log(oracle::kPiL) + 2 * lf - (j - m + 1) * log(nu) - std::lgamma(ld(j - m + 1));
}

// sum_j (z conj w)^j / ||z^j||^2 in long double.
cld kernel_series_oracle(ld nu, int m, cplx z, cplx w, int J) {
  const cld zw = to_ld(z) * std::conj(to_ld(w));
  cld acc = 0, pw = 1;
  for (int j = 0; j < J; ++j) {
    acc += pw * std::exp(-log_norm_oracle(nu, m, j));
    pw *= zw;
  }
  return acc;
}

// sum_j phi_j(x) psi_j(z) with the unnormalised Hermite recurrence.
cld transform_kernel_oracle(ld nu, int m, cplx z, double x, int J) {
  cld acc = 0, zp = 1;
  ld h0 = 0, h1 = 1;
  for (int j = 0; j < J; ++j) {
    const ld lphi = -0.5L * (j * std::log(ld(2)) + std::lgamma(ld(j + 1)) + 0.5L * std::log(oracle::kPiL));
    acc += h1 * std::exp(lphi - 0.5L * log_norm_oracle(nu, m, j)) * zp;
    zp *= to_ld(z);
    const ld h2 = 2 * ld(x) * h1 - 2 * ld(j) * h0;
    h0 = h1;
    h1 = h2;
  }
  return acc;
}

ld laguerre_oracle(int n, ld a, ld x) {
  ld l0 = 1, l1 = 1 + a - x;
  if (n == 0) return l0;
  for (int k = 1; k < n; ++k) {
    const ld l2 = ((2 * k + 1 + a - x) * l1 - (k + a) * l0) / (k + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

// (nu/pi) e^{nu z conj w} sum_k q^k L_k(nu|z-w|^2), q = e^{-nu t}.
cld heat_oracle(ld nu, ld t, cplx z, cplx w) {
  const ld q = std::exp(-nu * t), x = nu * std::norm(to_ld(z) - to_ld(w));
  ld s = 0, qk = 1, l0 = 1, l1 = 1 - x;
  s += l0;
  for (int k = 1; k < 4000 && qk > 1e-30L; ++k) {
    qk *= q;
    s += qk * l1;
    const ld l2 = ((2 * k + 1 - x) * l1 - k * l0) / (k + 1);
    l0 = l1;
    l1 = l2;
  }
  return nu / oracle::kPiL * std::exp(nu * to_ld(z) * std::conj(to_ld(w))) * s;
}

cld landau_oracle(ld nu, int ell, cplx z, cplx w) {
  return nu / oracle::kPiL * std::exp(nu * to_ld(z) * std::conj(to_ld(w))) *
         oracle::laguerre_explicit(ell, 0, nu * std::norm(to_ld(z) - to_ld(w)));
}

bargmann::TransformKernelSpec spec(double nu, int m, bargmann::TransformMethod method) {
  bargmann::TransformKernelSpec s;
  s.params = {nu, m};
  s.method = method;
  return s;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const std::vector<cplx> pts{0.0, {0.5, 0.5}, {-1.2, 0.9}, {1.6, -1.2}, {-0.4, -1.9}};
  double lib = 0, orc = 0;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 3; ++m) {
      for (cplx z : pts) {
        for (cplx w : pts) {
          cplx c = kernels::reproducing_kernel({nu, m}, z, w).value;
          cplx s = kernels::reproducing_kernel_series_adaptive({nu, m}, z, w).value;
          lib = std::max(lib, rel(c, s));
          orc = std::max(orc, rel(c, kernel_series_oracle(nu, m, z, w, 120)));
        }
      }
    }
  }
  o.require("closed_vs_series", lib, 1e-10);
  o.require("closed_vs_oracle", orc, 1e-10);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double lib = 0, orc = 0;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m : {1, 2, 3}) {
      bargmann::TransformEngine closed(spec(nu, m, bargmann::TransformMethod::ClosedIntegral));
      bargmann::TransformEngine series(spec(nu, m, bargmann::TransformMethod::BasisSeries));
      for (cplx z : {cplx(0), cplx(0.5), cplx(1, 0.5), cplx(0, 2)}) {
        for (double x : {-2.0, 0.0, 1.3}) {
          cplx a = closed.kernel(z, x).value, b = series.kernel(z, x).value;
          lib = std::max(lib, rel(a, b));
          orc = std::max(orc, rel(a, transform_kernel_oracle(nu, m, z, x, 150)));
        }
      }
    }
  }
  o.require("integral_vs_series", lib, 1e-7);
  o.require("integral_vs_oracle", orc, 1e-7);
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst = 0;
  for (int m : {1, 2, 3}) {
    bargmann::TransformEngine e(spec(1.0, m, bargmann::TransformMethod::ClosedIntegral));
    bargmann::CircleSampler sampler(e, 1.0, 16);
    for (int j = 0; j <= 10; ++j) {
      auto c = sampler.coefficients([j](double x) { return bargmann::hermite_function(j, x); });
      const double lead = double(std::exp(-0.5L * log_norm_oracle(1.0L, m, j)));
      for (int k = 0; k < 16; ++k) worst = std::max(worst, std::abs(c[k] - (k == j ? lead : 0.0)));
    }
  }
  o.require("coefficient_error", worst, 1e-8);
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 gen(20260101);
  std::normal_distribution<double> N;
  const int points = 16;
  const double radius = 1.0;
  auto rule = quad::make_rule(quad::RuleSpec::hermite(), 80);
  std::vector<std::unique_ptr<bargmann::TransformEngine>> engines;
  for (int m = 1; m <= 3; ++m)
    engines.push_back(std::make_unique<bargmann::TransformEngine>(spec(1.0, m, bargmann::TransformMethod::ClosedIntegral)));
  // kernel columns on the circle, shared by all vectors of the same m
  std::vector<std::vector<std::vector<cplx>>> columns(3);
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k < points; ++k) {
      const cplx z = std::polar(radius, 2 * specfun::kPi * k / points);
      columns[m - 1].push_back(engines[m - 1]->kernel_column(z, rule));
    }
  }
  double exact = 0, numeric = 0;
  for (int v = 0; v < 20; ++v) {
    const int m = 1 + v % 3;
    std::vector<cplx> lam(10);
    for (auto& c : lam) c = {N(gen), N(gen)};
    ld input = 0;
    for (auto c : lam) input += std::norm(to_ld(c));
    auto r = bargmann::isometry_check({1.0, m}, lam);
    exact = std::max(exact, double(std::abs(r.output_norm - input) / input));
    // numerical route: sample B[phi] on the circle, DFT, weight by monomial norms
    auto phi = [&](double x) {
      cplx s = 0;
      for (int j = 0; j < 10; ++j) s += lam[j] * bargmann::hermite_function(j, x);
      return s;
    };
    std::vector<cplx> samples(points);
    for (int k = 0; k < points; ++k) {
      samples[k] = bargmann::transform_apply(columns[m - 1][k], [&](double x) { return phi(x).real(); }, rule) +
                   cplx(0, 1) * bargmann::transform_apply(columns[m - 1][k], [&](double x) { return phi(x).imag(); }, rule);
    }
    ld norm = 0;
    for (int n = 0; n < points; ++n) {
      cld a = 0;
      for (int k = 0; k < points; ++k) a += to_ld(samples[k]) * std::polar(1.0L, -2 * oracle::kPiL * n * k / points);
      a /= ld(points) * std::pow(ld(radius), n);
      norm += std::norm(a) * std::exp(log_norm_oracle(1.0L, m, n));
    }
    numeric = std::max(numeric, double(std::abs(norm - input) / input));
  }
  o.require("exact_route", exact, 1e-9);
  o.require("numerical_route", numeric, 1e-6);
  return o;
}

Outcome criterion5() {
  Outcome o;
  varpi::VarpiTable t2(2);
  double conv = 0;
  for (double t = 0.01; t <= 20.0 + 1e-12; t *= 1.1) {
    const ld closed = oracle::kPiL / 8 * t * t * std::exp(-2.0L * t) * oracle::hyp1f1_integral(1.5L, 3.0L, t);
    conv = std::max(conv, double(std::abs(t2(t) - closed) / closed));
  }
  conv = std::max(conv, double(std::abs(t2(20.0) - varpi::varpi2_closed(20.0)) / varpi::varpi2_closed(20.0)));
  o.require("varpi2_vs_closed", conv, 1e-9);
  double lap = 0, violation = 0;
  for (int m = 2; m <= 3; ++m) {
    varpi::VarpiTable tab(m);
    for (int k = 0; k <= 5; ++k) {
      ld prod = 1;
      for (int i = 1; i <= m; ++i) prod *= (k + i);
      const ld closed = std::pow(std::sqrt(oracle::kPiL) / 2, m) / std::pow(prod, 1.5L);
      lap = std::max(lap, double(std::abs(varpi::varpi_laplace(tab, k).numeric - closed) / closed));
    }
    const ld b = oracle::kPiL / 8;  // B(3/2,3/2)
    for (double t = 0.01; t <= 40.0; t *= 1.15) {
      const ld bound = std::pow(b, m - 1) * std::pow(ld(t), (3 * m - 2) / 2.0L) * std::exp(-ld(t));
      const double v = tab(t);
      violation = std::max(violation, double(std::max<ld>(0, std::max<ld>(v - bound, -v))));
    }
  }
  o.require("laplace", lap, 1e-6);
  o.require("bound_violation", violation, 0.0);
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 3; ++m) {
      quad::PlanarRule pr(nu, 48, 64);
      for (int j = 0; j <= 20; ++j) {
        auto e = spaces::PowerSeries::monomial(j);
        cplx q = spaces::inner_product_quadrature({nu, m}, e, e, pr);
        const ld want = std::exp(log_norm_oracle(nu, m, j));
        worst = std::max(worst, double(std::abs(to_ld(q) - want) / want));
      }
    }
  }
  o.require("planar_vs_closed", worst, 1e-11);
  return o;
}

Outcome criterion7() {
  Outcome o;
  double lib = 0, orc = 0;
  const std::vector<cplx> pts{0.0, {0.3, 0.2}, {1.0, 0.0}, {-0.6, 0.8}};
  for (double nu : {0.5, 1.0, 2.0}) {
    for (double t : {0.2, 0.5, 1.0, 3.0}) {
      for (cplx z : pts) {
        for (cplx w : pts) {
          cplx c = kernels::heat_kernel(nu, t, z, w).value;
          cplx s = kernels::heat_kernel(nu, t, z, w, kernels::Method::SeriesTruncation).value;
          lib = std::max(lib, rel(c, s));
          orc = std::max(orc, rel(c, heat_oracle(nu, t, z, w)));
        }
      }
    }
  }
  o.require("closed_vs_series", lib, 1e-10);
  o.require("closed_vs_oracle", orc, 1e-10);
  double semi = 0;
  quad::PlanarRule big(1.0, 96, 128);
  const std::vector<std::pair<cplx, cplx>> cfg{{{0.2, 0.1}, {0.1, -0.2}}, {0.0, 0.3}, {{-0.2, 0.2}, {-0.1, 0.25}}};
  for (const auto& [z, w] : cfg) {
    cplx lhs = quad::integrate_plane(
        big, [&](cplx u) { return kernels::heat_kernel(1.0, 0.6, z, u).value * kernels::heat_kernel(1.0, 0.9, u, w).value; });
    semi = std::max(semi, rel(lhs, heat_oracle(1.0L, 1.5L, z, w)));
  }
  o.require("semigroup", semi, 1e-7);
  return o;
}

Outcome criterion8() {
  Outcome o;
  double sum_err = 0, orc = 0;
  for (double nu : {0.5, 1.2}) {
    for (auto [z, w] : std::vector<std::pair<cplx, cplx>>{{1.0, {0, 0.4}}, {{0.3, -0.2}, {-0.5, 0.1}}}) {
      for (int n = 0; n <= 10; ++n) {
        for (double frac : {0.0, 0.5, 0.999}) {
          const double lambda = n + frac;
          cplx e = kernels::spectral_projector_kernel(nu, lambda, z, w);
          cplx sum = 0;
          cld osum = 0;
          for (int l = 0; l <= n; ++l) {
            sum += kernels::landau_kernel(nu, l, z, w);
            osum += landau_oracle(nu, l, z, w);
          }
          sum_err = std::max(sum_err, rel(e, sum));
          orc = std::max(orc, rel(e, osum));
        }
      }
    }
  }
  o.require("summation_identity", sum_err, 1e-12);
  o.require("summation_vs_oracle", orc, 1e-12);
  double idem = 0;
  quad::PlanarRule pr(1.0, 64, 96);
  for (int ell = 0; ell <= 2; ++ell) {
    for (auto [a, b] : std::vector<std::pair<cplx, cplx>>{{0.5, {0, 0.3}}, {{-0.2, 0.4}, {0.6, -0.1}}}) {
      cplx v = quad::integrate_plane(pr, [&](cplx u) { return kernels::landau_kernel(1.0, ell, a, u) * kernels::landau_kernel(1.0, ell, u, b); });
      idem = std::max(idem, double(std::abs(to_ld(v) - landau_oracle(1.0L, ell, a, b))));
    }
  }
  o.require("idempotence", idem, 1e-7);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const double h = 1e-3;
  std::mt19937_64 gen(20260109);
  std::normal_distribution<double> N;
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  double holo = 0;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int deg = 0; deg <= 6; ++deg) {
      std::vector<cplx> a(deg + 1);
      for (auto& c : a) c = {N(gen), N(gen)};
      spaces::PowerSeries P(a);
      auto d2 = P.derivative(2);
      for (int i = 0; i < 10; ++i) {
        cplx z(U(gen), U(gen));
        const double scale = std::max(1.0, std::abs(d2(z)) + std::abs(P(z)));
        cplx v = spaces::magnetic_laplacian_fd(nu, [&](cplx u) { return P(u); }, z, h);
        holo = std::max(holo, std::abs(v) / (h * h * scale));
      }
    }
  }
  o.require("holomorphic_residual/(h^2 scale)", holo, 10.0);
  // -d dbar F + nu zbar dbar F: zbar -> nu zbar;  |z|^2 -> nu |z|^2 - 1
  double wit = 0;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (cplx z : {cplx(1, 1), cplx(1.0), cplx(-0.7, 0.4)}) {
      cplx a = spaces::magnetic_laplacian_fd(nu, [](cplx u) { return std::conj(u); }, z, h);
      cplx b = spaces::magnetic_laplacian_fd(nu, [](cplx u) { return u * std::conj(u); }, z, h);
      wit = std::max({wit, std::abs(a - nu * std::conj(z)), std::abs(b - (nu * std::norm(z) - 1.0))});
    }
  }
  o.require("witnesses", wit, 5e-6);
  return o;
}

Outcome criterion10() {
  Outcome o;
  double ratio = 0, terms = 0;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m : {1, 2, 3}) {
      auto d = bargmann::fock_derivative_divergence_demo(nu, m, 10001);
      const int j = 10000;
      ld num = 1, den = 1;
      for (int i = 1; i <= m; ++i) num *= ld(j + i) * (j + i);
      for (int i = 1; i <= m + 2; ++i) den *= ld(j + i);
      const ld term = oracle::kPiL * std::pow(ld(nu), m) * num / den;
      terms = std::max(terms, double(std::abs(d.terms[j] - term) / term));
      ratio = std::max(ratio, std::abs(d.limit_ratios[j] - 1.0));
    }
  }
  o.require("term_vs_formula", terms, 1e-12);
  o.require("limit_ratio_deviation", ratio, 0.01);
  const double nu = 1.5;
  std::vector<cplx> expo(60), phi(60);
  for (int j = 0; j < 60; ++j) {
    expo[j] = double(std::pow(ld(nu), j) / oracle::factorial(j));
    phi[j] = double(std::sqrt(std::pow(ld(nu), j + 1) / oracle::factorial(j + 2)));
  }
  auto ve = spaces::membership_test({nu, 1}, spaces::PowerSeries(expo));
  auto vp = spaces::membership_test({nu, 1}, spaces::PowerSeries(phi));
  o.require("exp_not_convergent", ve.classification == spaces::MembershipClass::ConvergentEvidence ? 0 : 1, 0);
  o.require("phi_not_divergent", vp.classification == spaces::MembershipClass::DivergentEvidence ? 0 : 1, 0);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "reproducing kernel closed form vs series", 5, criterion1},
      {2, "transform kernel dual route", 20, criterion2},
      {3, "basis image of Hermite functions", 10, criterion3},
      {4, "transform isometry", 10, criterion4},
      {5, "varpi closed form, Laplace transform, bound", 10, criterion5},
      {6, "monomial norms vs planar quadrature", 3, criterion6},
      {7, "heat kernel and semigroup", 10, criterion7},
      {8, "spectral projector sum and idempotence", 15, criterion8},
      {9, "magnetic Laplacian characterization", 2, criterion9},
      {10, "derivative divergence and membership", 2, criterion10},
  };
  int failures = 0;
  double total = 0;
  for (const auto& c : all) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += dt;
    const bool in_time = dt < c.budget;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %2d %s  %-44s %s time=%.2fs/%gs%s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                out.detail.c_str(), dt, c.budget, in_time ? "" : "!");
  }
  const bool total_ok = total < 120.0;
  std::printf("total %s time=%.2fs/120s, %d criterion failure(s)\n", total_ok ? "PASS" : "FAIL", total, failures);
  return failures == 0 && total_ok ? 0 : 1;
}
