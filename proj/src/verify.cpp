// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "bdspace/bargmann.hpp"
#include "bdspace/errors.hpp"
#include "bdspace/kernels.hpp"
#include "bdspace/quadrature.hpp"
#include "bdspace/spaces.hpp"
#include "bdspace/specfun.hpp"
#include "bdspace/varpi.hpp"
#include "json.hpp"

namespace bds::verify {

namespace {

using cplx = std::complex<double>;
using specfun::kPi;

class Recorder {
 public:
  Recorder(Report& r, double scale) : report_(r), scale_(scale) {}

  void add(std::string name, std::string formula, cplx lhs, cplx rhs, double residual, double tol) {
    Check c;
    c.name = std::move(name);
    c.formula = std::move(formula);
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = residual;
    c.tolerance = tol * scale_;
    c.passed = std::isfinite(residual) && residual <= c.tolerance;
    report_.checks.push_back(std::move(c));
  }

  // Records the worst case of a sweep.
  struct Worst {
    cplx lhs{}, rhs{};
    double residual = -1.0;
    void take(cplx l, cplx r, double res) {
      if (!(res <= residual)) {  // NaN propagates as worst
        lhs = l;
        rhs = r;
        residual = res;
      }
    }
  };
  void add(std::string name, std::string formula, const Worst& w, double tol) {
    add(std::move(name), std::move(formula), w.lhs, w.rhs, w.residual, tol);
  }

 private:
  Report& report_;
  double scale_;
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// ---------------------------------------------------------------------------

void suite_specfun(Recorder& rec, std::mt19937_64& gen) {
  using namespace specfun;
  rec.add("specfun.hermite_h1", "H_1(3) = 6", hermite(1, 3.0), 6.0, std::abs(hermite(1, 3.0) - 6.0), 1e-15);
  rec.add("specfun.hermite_h2", "H_2(1.5) = 4 x^2 - 2 = 7", hermite(2, 1.5), 7.0, std::abs(hermite(2, 1.5) - 7.0), 1e-14);
  rec.add("specfun.hermite_h5", "H_5(1) = 32 - 160 + 120", hermite(5, 1.0), -8.0, std::abs(hermite(5, 1.0) + 8.0), 1e-13);

  auto gh = quad::make_rule(quad::RuleSpec::hermite(), 64);
  Recorder::Worst orth;
  for (int j = 0; j <= 15; ++j) {
    for (int k = 0; k <= 15; ++k) {
      double v = quad::integrate_line(gh, [&](double x) { return hermite_orthonormal(j, x) * hermite_orthonormal(k, x); });
      double want = j == k ? 1.0 : 0.0;
      orth.take(v, want, std::abs(v - want));
    }
  }
  rec.add("specfun.hermite_orthonormality", "int phi_j phi_k e^{-x^2} = delta_jk, j,k <= 15, 64-node Gauss-Hermite", orth, 1e-10);

  Recorder::Worst lsum;
  for (int k = 0; k <= 20; ++k) {
    for (double a : {0.0, 1.0}) {
      for (double x : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        auto [l, r] = laguerre_sum_identity(k, a, x);
        lsum.take(l, r, std::abs(l - r) / (1 + std::abs(r)));
      }
    }
  }
  rec.add("specfun.laguerre_sum_identity", "sum_{j<=k} L_j^(a)(x) = L_k^(a+1)(x)", lsum, 1e-12);

  auto gj = quad::make_rule(quad::RuleSpec::jacobi(0.5, 0.5, 0.0, 1.0), 64);
  Recorder::Worst h1;
  for (double t = 0.0; t <= 20.0; t += 1.0) {
    double s = hyp1f1(1.5, 3.0, t);
    double q = quad::integrate_line(gj, [&](double u) { return std::exp(t * u); }) / beta(1.5, 1.5);
    h1.take(s, q, std::abs(s - q) / std::abs(q));
  }
  rec.add("specfun.hyp1f1_integral", "1F1(3/2;3;t) series vs Euler integral, t in [0,20]", h1, 1e-9);

  Recorder::Worst h2;
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int i = 0; i < 12; ++i) {
    cplx x(U(gen), U(gen));
    double b = 1.0 + (i % 4);
    cplx s = hyp2f2_11(b, x);
    cplx brute = 0.0, term = 1.0;
    for (int k = 0; k < 120; ++k) {
      brute += term;
      term *= x * ((k + 1.0) / ((b + k) * (b + k)));
    }
    h2.take(s, brute, rel(s, brute));
  }
  rec.add("specfun.hyp2f2_brute_force", "2F2(1,1;b,b;x) vs 120-term direct sum at seeded complex x", h2, 1e-13);

  Recorder::Worst ht;
  for (int ell = 0; ell <= 4; ++ell) {
    for (cplx s : {cplx(0.9, 0), cplx(-0.5, 0.6), cplx(0.1, -0.8)}) {
      const double x = 0.6;
      cplx closed = hermite_tail_sum(ell, x, s);
      cplx partial = 0.0, sp = 1.0;
      double fact = 1.0;
      for (int k = 0; k < 60; ++k) {
        partial += hermite(k + ell, cplx(x)) * sp / fact;
        sp *= s;
        fact *= (k + 1);
      }
      ht.take(closed, partial, rel(closed, partial));
    }
  }
  rec.add("specfun.hermite_generating_tail", "sum_k H_{k+l}(x) s^k/k! = e^{2xs-s^2} H_l(x-s)", ht, 1e-10);

  rec.add("specfun.gamma_3_2", "Gamma(3/2) = sqrt(pi)/2", gamma(1.5), std::sqrt(kPi) / 2,
          rel(gamma(1.5), std::sqrt(kPi) / 2), 1e-15);
  rec.add("specfun.beta_3_2", "B(3/2,3/2) = pi/8", beta(1.5, 1.5), kPi / 8, rel(beta(1.5, 1.5), kPi / 8), 1e-15);
}

void suite_spaces(Recorder& rec, std::mt19937_64& gen) {
  using namespace spaces;
  Recorder::Worst norms;
  for (double nu : {0.5, 1.0, 2.0}) {
    quad::PlanarRule pr(nu, 32, 64);
    for (int j = 0; j <= 20; ++j) {
      cplx q = quad::integrate_plane(pr, [&](cplx z) { return cplx(std::pow(std::norm(z), j)); });
      double want = monomial_norm_sq({nu, 0}, j);
      norms.take(q, want, rel(q, want));
    }
  }
  rec.add("spaces.monomial_norms_planar", "int |z|^{2j} e^{-nu|z|^2} = pi j!/nu^{j+1}, j <= 20", norms, 1e-11);

  Recorder::Worst dnorm;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 1; m <= 3; ++m) {
      SpaceParams p{nu, m};
      quad::PlanarRule pr(nu, 48, 64);
      for (int j = 0; j <= 20; ++j) {
        auto e = PowerSeries::monomial(j);
        cplx q = inner_product_quadrature(p, e, e, pr);
        double want = monomial_norm_sq(p, j);
        dnorm.take(q, want, rel(q, want));
      }
    }
  }
  rec.add("spaces.split_norms_planar", "||z^j||^2_{nu,m} coefficient form vs split planar integral", dnorm, 1e-11);

  Recorder::Worst ortho;
  for (int m = 0; m <= 3; ++m) {
    SpaceParams p{1.0, m};
    quad::PlanarRule pr(1.0, 48, 64);
    for (int j = 0; j <= 12; ++j) {
      for (int k = 0; k <= 12; ++k) {
        auto ej = PowerSeries::monomial(j, std::exp(-0.5 * log_monomial_norm_sq(p, j)));
        auto ek = PowerSeries::monomial(k, std::exp(-0.5 * log_monomial_norm_sq(p, k)));
        cplx v = inner_product_quadrature(p, ej, ek, pr);
        ortho.take(v, j == k ? 1.0 : 0.0, std::abs(v - (j == k ? 1.0 : 0.0)));
      }
    }
  }
  rec.add("spaces.basis_orthonormality", "<psi_j, psi_k> = delta_jk under planar quadrature, j,k <= 12", ortho, 1e-9);

  Recorder::Worst ip;
  std::normal_distribution<double> N;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<cplx> a(9), b(9);
    for (auto& c : a) c = {N(gen), N(gen)};
    for (auto& c : b) c = {N(gen), N(gen)};
    for (int m = 0; m <= 3; ++m) {
      SpaceParams p{0.5 + 0.25 * trial, m};
      cplx exact = inner_product(p, PowerSeries(a), PowerSeries(b));
      cplx quadv = inner_product_quadrature(p, PowerSeries(a), PowerSeries(b), quad::PlanarRule(p.nu));
      ip.take(exact, quadv, rel(exact, quadv));
    }
  }
  rec.add("spaces.inner_product_random", "coefficient vs quadrature inner product, seeded degree-8 polynomials", ip, 1e-9);

  const double h = 1e-3;
  Recorder::Worst holo;
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int deg = 0; deg <= 6; ++deg) {
    std::vector<cplx> a(deg + 1);
    for (auto& c : a) c = {N(gen), N(gen)};
    PowerSeries P(a);
    auto d2 = P.derivative(2);
    for (int i = 0; i < 20; ++i) {
      cplx z(U(gen), U(gen));
      double scale = std::max(1.0, std::abs(d2(z)) + std::abs(P(z)));
      cplx v = magnetic_laplacian_fd(1.3, [&](cplx w) { return P(w); }, z, h);
      holo.take(v, 0.0, std::abs(v) / (h * h * scale));
    }
  }
  rec.add("spaces.laplacian_annihilates_holomorphic", "|Delta_nu P| / (h^2 scale) for holomorphic P, deg <= 6", holo, 10.0);

  const double hw = 1e-3;
  cplx w1 = magnetic_laplacian_fd(1.0, [](cplx z) { return std::conj(z); }, cplx(1, 1), hw);
  rec.add("spaces.laplacian_zbar", "Delta_1 zbar at 1+i = 1-i", w1, cplx(1, -1), std::abs(w1 - cplx(1, -1)), 5e-6);
  cplx w2 = magnetic_laplacian_fd(2.0, [](cplx z) { return z * std::conj(z); }, 1.0, hw);
  rec.add("spaces.laplacian_abs2", "Delta_2 |z|^2 at 1 = -1 + nu|z|^2 = 1", w2, 1.0, std::abs(w2 - 1.0), 5e-6);

  Recorder::Worst tw;
  for (double nu : {0.5, 2.0, 3.0}) {
    PlaneFunction zbar = [](cplx z) { return std::conj(z); };
    auto T = scale_intertwiner(nu, zbar);
    const cplx w(1, 0.5);
    cplx lhs = magnetic_laplacian_fd(1.0, T, w, hw);
    PlaneFunction lap = [&](cplx z) { return magnetic_laplacian_fd(nu, zbar, z, hw); };
    cplx rhs = scale_intertwiner(nu, lap)(w) / nu;
    tw.take(lhs, rhs, std::abs(lhs - rhs));
  }
  rec.add("spaces.scale_intertwining", "Delta_1 T_nu F = (1/nu) T_nu Delta_nu F for F = zbar", tw, 5e-6);

  Recorder::Worst iso;
  for (double nu : {0.5, 2.0, 3.0}) {
    PlaneFunction z2 = [](cplx z) { return z * z; };
    auto T = scale_intertwiner(nu, z2);
    cplx a = quad::integrate_plane(quad::PlanarRule(1.0), [&](cplx z) { return cplx(std::norm(T(z))); });
    cplx b = quad::integrate_plane(quad::PlanarRule(nu), [&](cplx z) { return cplx(std::norm(z2(z))); });
    iso.take(a, b, rel(a, b));
  }
  rec.add("spaces.scale_isometry", "||T_nu z^2|| in the unit measure = ||z^2|| in the nu measure", iso, 1e-9);

  const double nu = 1.5;
  std::vector<cplx> expo(60), phi(60);
  double fact = 1.0;
  for (int j = 0; j < 60; ++j) {
    if (j) fact *= j;
    expo[j] = std::pow(nu, j) / fact;
    phi[j] = std::sqrt(std::exp((j + 1) * std::log(nu) - specfun::log_factorial(j + 2)));
  }
  auto ve = membership_test({nu, 1}, PowerSeries(expo));
  auto vp = membership_test({nu, 1}, PowerSeries(phi));
  rec.add("spaces.membership_exponential", "e^{nu z} classified ConvergentEvidence (0 = yes)", ve.ratio_estimate, 0.0,
          ve.classification == MembershipClass::ConvergentEvidence ? 0.0 : 1.0, 0.0);
  rec.add("spaces.membership_phi_nu", "phi_nu classified DivergentEvidence in the Dirichlet space (0 = yes)",
          vp.bertrand_estimate, 0.0, vp.classification == MembershipClass::DivergentEvidence ? 0.0 : 1.0, 0.0);
}

void suite_kernels(Recorder& rec, std::mt19937_64& gen) {
  using namespace kernels;
  const std::vector<cplx> pts{0.0, {0.5, 0.5}, {-1.2, 0.9}, {1.6, -1.2}, {-0.4, -1.9}};
  Recorder::Worst cs;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 3; ++m) {
      for (cplx z : pts) {
        for (cplx w : pts) {
          cplx c = reproducing_kernel({nu, m}, z, w).value;
          cplx s = reproducing_kernel_series_adaptive({nu, m}, z, w).value;
          cs.take(c, s, rel(c, s));
        }
      }
    }
  }
  rec.add("kernels.closed_vs_series", "reproducing kernel closed form vs orthonormal-basis series, 300 points", cs, 1e-10);

  Recorder::Worst herm;
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  std::vector<cplx> six(6);
  for (auto& z : six) z = {U(gen), U(gen)};
  for (int m = 0; m <= 3; ++m) {
    for (cplx a : six) {
      for (cplx b : six) {
        cplx k1 = reproducing_kernel({1.3, m}, a, b).value, k2 = reproducing_kernel({1.3, m}, b, a).value;
        herm.take(k1, std::conj(k2), rel(k1, std::conj(k2)));
      }
    }
  }
  rec.add("kernels.hermitian_symmetry", "K(z,w) = conj K(w,z)", herm, 1e-14);

  Recorder::Worst rp;
  std::normal_distribution<double> N;
  std::vector<cplx> a(7);
  for (auto& c : a) c = {N(gen), N(gen)};
  for (int m = 0; m <= 3; ++m) {
    auto [l, r] = reproducing_property_check({1.0, m}, spaces::PowerSeries(a), cplx(0.7, -0.2));
    rp.take(l, r, std::abs(l - r));
  }
  rec.add("kernels.reproducing_property", "<f, K(.,w)> = f(w) for a seeded degree-6 f", rp, 1e-10);

  Recorder::Worst spec;
  for (int n = 0; n <= 10; ++n) {
    const double lambda = n + 0.3;
    cplx z = 1.0, w(0, 0.4);
    cplx sum = 0.0;
    for (int l = 0; l <= n; ++l) sum += landau_kernel(1.2, l, z, w);
    cplx e = spectral_projector_kernel(1.2, lambda, z, w);
    spec.take(e, sum, rel(e, sum));
  }
  rec.add("kernels.spectral_projector_sum", "E_lambda kernel = sum_{l <= [lambda]} Landau kernels", spec, 1e-12);

  Recorder::Worst idem;
  quad::PlanarRule pr(1.0, 64, 96);
  for (int ell = 0; ell <= 2; ++ell) {
    cplx za = 0.5, zb(0, 0.3);
    cplx v = quad::integrate_plane(pr, [&](cplx u) { return landau_kernel(1.0, ell, za, u) * landau_kernel(1.0, ell, u, zb); });
    cplx want = landau_kernel(1.0, ell, za, zb);
    idem.take(v, want, std::abs(v - want));
  }
  rec.add("kernels.landau_idempotence", "int K_l(z,u) K_l(u,w) dmu(u) = K_l(z,w), l <= 2 (also fixes the nu/pi prefactor)",
          idem, 1e-8);

  Recorder::Worst heat;
  for (double t : {0.2, 0.5, 1.0, 3.0}) {
    for (cplx z : {cplx(1.0), cplx(0.3, -0.4)}) {
      cplx w(0.3, 0.2);
      cplx c = heat_kernel(1.0, t, z, w).value;
      cplx s = heat_kernel(1.0, t, z, w, Method::SeriesTruncation).value;
      heat.take(c, s, rel(c, s));
    }
  }
  rec.add("kernels.heat_closed_vs_series", "heat kernel closed form vs Laguerre series, t >= 0.2", heat, 1e-10);

  Recorder::Worst semi;
  quad::PlanarRule big(1.0, 96, 128);
  const std::vector<std::pair<cplx, cplx>> cfg{{{0.2, 0.1}, {0.1, -0.2}}, {0.0, 0.3}, {{-0.2, 0.2}, {-0.1, 0.25}}};
  for (const auto& [z, w] : cfg) {
    cplx lhs = quad::integrate_plane(big, [&](cplx u) { return heat_kernel(1.0, 0.6, z, u).value * heat_kernel(1.0, 0.9, u, w).value; });
    cplx rhs = heat_kernel(1.0, 1.5, z, w).value;
    semi.take(lhs, rhs, rel(lhs, rhs));
  }
  rec.add("kernels.heat_semigroup", "int K_{t1}(z,u) K_{t2}(u,w) dmu(u) = K_{t1+t2}(z,w)", semi, 1e-7);
}

void suite_varpi(Recorder& rec, std::mt19937_64&) {
  using namespace varpi;
  VarpiTable t2(2);
  Recorder::Worst c2;
  for (double t = 0.01; t <= 20.0; t *= 1.2) {
    double v = t2(t), c = varpi2_closed(t);
    c2.take(v, c, std::abs(v - c) / c);
  }
  rec.add("varpi.m2_closed_form", "varpi_2 convolution vs (pi/8) t^2 e^{-2t} 1F1(3/2;3;t), t in [0.01,20]", c2, 1e-9);

  Recorder::Worst lap;
  for (int m = 2; m <= 3; ++m) {
    VarpiTable tab(m);
    for (int k = 0; k <= 5; ++k) {
      auto r = varpi_laplace(tab, k);
      lap.take(r.numeric, r.closed, std::abs(r.numeric - r.closed) / r.closed);
    }
  }
  rec.add("varpi.laplace_transform", "int e^{-kt} varpi_m = Gamma(3/2)^m / [(k+1)...(k+m)]^{3/2}, m in {2,3}, k <= 5", lap, 1e-6);

  Recorder::Worst bound;
  for (int m = 2; m <= 4; ++m) {
    VarpiTable tab(m);
    for (double t = 0.01; t <= 30.0; t *= 1.25) {
      double v = tab(t), b = varpi_bound(m, t);
      // residual > 0 only when the bound is violated or varpi < 0
      double viol = std::max(v - b, -v) / b;
      bound.take(v, b, std::max(0.0, viol));
    }
  }
  rec.add("varpi.bound", "0 <= varpi_m(t) <= B(3/2,3/2)^{m-1} t^{(3m-2)/2} e^{-t}", bound, 0.0);

  Recorder::Worst interp;
  VarpiTable t3(3);
  for (double t = 0.013; t < 500.0; t *= 1.37) {
    double a = t3.smooth_factor(t), d = t3.smooth_factor_direct(t);
    interp.take(a, d, std::abs(a - d) / d);
  }
  rec.add("varpi.table_interpolation", "tabulated vs directly integrated smooth factor of varpi_3", interp, 1e-10);
}

void suite_transform(Recorder& rec, std::mt19937_64& gen) {
  using namespace bargmann;
  auto spec = [](double nu, int m, TransformMethod meth) {
    TransformKernelSpec s;
    s.params = {nu, m};
    s.method = meth;
    return s;
  };
  Recorder::Worst dual;
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m : {1, 2, 3}) {
      TransformEngine closed(spec(nu, m, TransformMethod::ClosedIntegral));
      TransformEngine series(spec(nu, m, TransformMethod::BasisSeries));
      for (cplx z : {cplx(0), cplx(0.5), cplx(1, 0.5), cplx(0, 2)}) {
        for (double x : {-2.0, 0.0, 1.3}) {
          cplx a = closed.kernel(z, x).value, b = series.kernel(z, x).value;
          dual.take(a, b, rel(a, b));
        }
      }
    }
  }
  rec.add("transform.dual_route_kernel", "generating-function integral kernel vs Hermite x basis series", dual, 1e-7);

  auto rule = quad::make_rule(quad::RuleSpec::hermite(), 80);
  Recorder::Worst img;
  for (int m : {1, 2, 3}) {
    TransformEngine e(spec(1.0, m, TransformMethod::ClosedIntegral));
    CircleSampler sampler(e, 1.0, 16);
    for (int j = 0; j <= 10; ++j) {
      auto c = sampler.coefficients([j](double x) { return hermite_function(j, x); });
      const double lead = std::exp(-0.5 * spaces::log_monomial_norm_sq({1.0, m}, j));
      for (int k = 0; k < 16; ++k) {
        cplx want = k == j ? lead : 0.0;
        img.take(c[k], want, std::abs(c[k] - want));
      }
    }
  }
  rec.add("transform.basis_image", "Taylor coefficients of B[h_j] equal those of psi_j, j <= 10, m in {1,2,3}", img, 1e-8);

  Recorder::Worst iso_exact, iso_num;
  std::normal_distribution<double> N;
  TransformEngine e1(spec(1.0, 1, TransformMethod::ClosedIntegral));
  CircleSampler s1(e1, 1.0, 16);
  for (int v = 0; v < 20; ++v) {
    const int m = 1 + v % 3;
    std::vector<cplx> lam(10);
    for (auto& c : lam) c = {N(gen), N(gen)};
    auto r = isometry_check({1.0, m}, lam, m == 1 ? &s1 : nullptr);
    iso_exact.take(r.output_norm, r.input_norm, std::abs(r.output_norm - r.input_norm) / r.input_norm);
    if (m == 1) iso_num.take(r.numerical_norm, r.input_norm, std::abs(r.numerical_norm - r.input_norm) / r.input_norm);
  }
  rec.add("transform.isometry_exact", "||B[phi]||^2 from image coefficients = sum |lambda_j|^2, 20 seeded vectors", iso_exact, 1e-9);
  rec.add("transform.isometry_numerical", "same norm from sampled transform values and DFT coefficient recovery", iso_num, 1e-6);

  Recorder::Worst nb;
  for (int m = 0; m <= 3; ++m) {
    for (double nu : {0.5, 1.0, 2.0}) {
      for (cplx z : {cplx(0), cplx(0.3, 0.2), cplx(-1.2, 0.8), cplx(1.5)}) {
        auto [l, r] = kernel_norm_bound_check({nu, m}, z);
        nb.take(l, r, std::max(0.0, (l - r) / r));
      }
    }
  }
  rec.add("transform.kernel_norm_bound", "sum_j |psi_j(z)|^2 <= stated bound", nb, 1e-12);

  Recorder::Worst div;
  for (int m : {1, 2, 3}) {
    auto d = fock_derivative_divergence_demo(1.0, m, 10001);
    div.take(d.limit_ratios[10000], 1.0, std::abs(d.limit_ratios[10000] - 1.0));
  }
  rec.add("transform.divergence_term_limit", "derivative norm-series term / (pi nu^m (j+1)^{m-2}) -> 1 at j = 1e4", div, 0.01);
}

using SuiteFn = std::function<void(Recorder&, std::mt19937_64&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"specfun", suite_specfun}, {"spaces", suite_spaces},       {"kernels", suite_kernels},
      {"varpi", suite_varpi},     {"transform", suite_transform},
  };
  return r;
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = suite;
  j["config"] = {{"tol_scale", tol_scale}, {"seed", seed}};
  j["all_passed"] = all_passed();
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"formula", c.formula},
                   {"lhs", {c.lhs.real(), c.lhs.imag()}},
                   {"rhs", {c.rhs.real(), c.rhs.imag()}},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance},
                   {"passed", c.passed}});
  }
  j["checks"] = std::move(arr);
  if (timing) j["wall_time"] = wall_time;
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "specfun", "spaces", "kernels", "varpi", "transform"};
  return names;
}

Report run_suite(const std::string& suite, double tol_scale, std::uint64_t seed, bool timing) {
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) throw DomainError("run_suite: tol_scale must be positive");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw DomainError("run_suite: unknown suite '" + suite + "'");
  Report report;
  report.suite = suite;
  report.tol_scale = tol_scale;
  report.seed = seed;
  report.timing = timing;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(report, tol_scale);
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    // each suite gets its own stream so results do not depend on which others ran
    std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(name) & 0xffffffffu)};
    std::mt19937_64 gen(seq);
    fn(rec, gen);
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bds::verify
