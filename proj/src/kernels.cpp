// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bds::kernels {

using specfun::CompensatedSum;
using specfun::kPi;

const char* to_string(Method m) { return m == Method::ClosedForm ? "closed" : "series"; }

KernelValue reproducing_kernel(const SpaceParams& p, cplx z, cplx w, const specfun::SeriesControl& ctl) {
  p.validate();
  const double c = p.nu / kPi;
  const cplx zw = z * std::conj(w);
  KernelValue kv;
  kv.method = Method::ClosedForm;
  if (p.m == 0) {
    kv.value = c * std::exp(p.nu * zw);
    return kv;
  }
  CompensatedSum<cplx> head;
  cplx term = 1.0;
  for (int j = 0; j < p.m; ++j) {
    head.add(term);
    term *= p.nu * zw / static_cast<double>(j + 1);
  }
  const auto f = specfun::hyp2f2_11_series(p.m + 1.0, p.nu * zw, ctl);
  const double mfact = std::exp(specfun::log_factorial(p.m));
  const cplx tail_pref = std::pow(zw, p.m) / (mfact * mfact);
  kv.value = c * (head.value() + tail_pref * f.value);
  kv.terms = f.terms;
  kv.residual = c * std::abs(tail_pref) * f.last_term;
  return kv;
}

namespace {

// (z wbar)^j / ||e_j||^2 in log-polar form.
cplx series_term(const SpaceParams& p, cplx zw, int j) {
  if (j == 0) return std::exp(-spaces::log_monomial_norm_sq(p, 0));
  if (zw == 0.0) return 0.0;
  const double lr = j * std::log(std::abs(zw)) - spaces::log_monomial_norm_sq(p, j);
  return std::polar(std::exp(lr), j * std::arg(zw));
}

// Successive terms (z wbar)^j / ||e_j||^2 in long double, advanced by the
// exact norm ratio ||e_{j+1}||^2 / ||e_j||^2. The series cancels heavily
// when Re(z wbar) < 0, so the extra precision is kept until the end.
class TermStream {
 public:
  using ld = long double;
  using cld = std::complex<long double>;

  TermStream(const SpaceParams& p, cplx zw) : nu_(p.nu), m_(p.m), zw_(zw.real(), zw.imag()) {
    term_ = cld(ld(p.nu) / ld(3.141592653589793238462643383279502884L), 0.0L);
  }

  const cld& term() const { return term_; }

  void advance() {
    term_ *= zw_ / norm_ratio(j_);
    ++j_;
  }

 private:
  // ||e_{j+1}||^2 / ||e_j||^2
  ld norm_ratio(int j) const {
    const ld n = nu_;
    if (m_ == 0 || j + 1 < m_) return (j + 1) / n;
    if (j + 1 == m_) {
      ld r = m_;
      for (int i = 2; i <= m_; ++i) r *= i;  // m * m!
      return r * std::pow(n, m_ - 1);
    }
    return ld(j + 1) * (j + 1) / ((j + 1 - m_) * n);
  }

  ld nu_;
  int m_;
  cld zw_;
  cld term_;
  int j_ = 0;
};

// |t_{j+1}/t_j| for j >= 1 (the ratio is eventually decreasing in j).
double term_ratio(const SpaceParams& p, double azw, int j) {
  return azw * std::exp(spaces::log_monomial_norm_sq(p, j) - spaces::log_monomial_norm_sq(p, j + 1));
}

}  // namespace

KernelValue reproducing_kernel_series(const SpaceParams& p, cplx z, cplx w, int J) {
  p.validate();
  if (J < 1) throw DomainError("reproducing_kernel_series: J must be >= 1");
  const cplx zw = z * std::conj(w);
  TermStream ts(p, zw);
  std::complex<long double> sum = 0.0L;
  cplx last = 0.0;
  for (int j = 0; j < J; ++j) {
    sum += ts.term();
    last = cplx(double(ts.term().real()), double(ts.term().imag()));
    ts.advance();
  }
  KernelValue kv;
  kv.method = Method::SeriesTruncation;
  kv.value = cplx(double(sum.real()), double(sum.imag()));
  kv.terms = J;
  if (zw == 0.0) {
    kv.residual = 0.0;
  } else {
    // tail <= |t_J| / (1 - r) with r the ratio at J, valid once r < 1 and
    // the ratio keeps decreasing (true beyond the peak term).
    const double r = term_ratio(p, std::abs(zw), J - 1);
    const double r_next = term_ratio(p, std::abs(zw), J);
    kv.residual = (r < 1.0 && r_next <= r) ? std::abs(last) * r / (1.0 - r) : std::numeric_limits<double>::infinity();
  }
  return kv;
}

KernelValue reproducing_kernel_series_adaptive(const SpaceParams& p, cplx z, cplx w, double rel_tol, int max_terms) {
  p.validate();
  if (!(rel_tol > 0.0)) throw DomainError("reproducing_kernel_series_adaptive: rel_tol must be positive");
  const cplx zw = z * std::conj(w);
  const double azw = std::abs(zw);
  TermStream ts(p, zw);
  std::complex<long double> sum = 0.0L;
  auto value = [&] { return cplx(double(sum.real()), double(sum.imag())); };
  KernelValue kv;
  kv.method = Method::SeriesTruncation;
  for (int j = 0; j < max_terms; ++j) {
    const double at = double(std::abs(ts.term()));
    sum += ts.term();
    ts.advance();
    if (azw == 0.0) {
      kv.value = value();
      kv.terms = 1;
      return kv;
    }
    const double r = term_ratio(p, azw, j);
    if (j >= p.m && r < 1.0 && term_ratio(p, azw, j + 1) <= r) {
      const double bound = at * r / (1.0 - r);
      if (bound <= rel_tol * std::abs(value())) {
        kv.value = value();
        kv.terms = j + 1;
        kv.residual = bound;
        return kv;
      }
    }
  }
  throw TruncationError("reproducing_kernel_series_adaptive: no convergence within " + std::to_string(max_terms) +
                            " terms",
                        value(), max_terms);
}

std::pair<cplx, cplx> reproducing_property_check(const SpaceParams& p, const PowerSeries& f, cplx w) {
  p.validate();
  // K(., w) = sum_j conj(w)^j / ||e_j||^2 z^j, truncated at deg f.
  std::vector<cplx> b(f.degree() + 1);
  for (int j = 0; j <= f.degree(); ++j) b[j] = series_term(p, std::conj(w), j);
  const cplx lhs = spaces::inner_product(p, f, PowerSeries(std::move(b)));
  return {lhs, f(w)};
}

cplx landau_kernel(double nu, int ell, cplx z, cplx w) {
  if (!(nu > 0.0)) throw DomainError("landau_kernel: nu must be positive");
  if (ell < 0) throw DomainError("landau_kernel: ell must be non-negative");
  return nu / kPi * std::exp(nu * z * std::conj(w)) * specfun::laguerre(ell, 0.0, nu * std::norm(z - w));
}

cplx landau_projector_apply(double nu, int ell, const PlaneFunction& phi, const quad::PlanarRule& rule, cplx z) {
  if (std::abs(rule.nu() - nu) > 1e-15 * nu) throw DomainError("landau_projector_apply: rule nu differs from nu");
  return quad::integrate_plane(rule, [&](cplx w) { return phi(w) * landau_kernel(nu, ell, z, w); });
}

cplx spectral_projector_kernel(double nu, double lambda, cplx z, cplx w) {
  if (!(nu > 0.0)) throw DomainError("spectral_projector_kernel: nu must be positive");
  if (!std::isfinite(lambda)) throw DomainError("spectral_projector_kernel: lambda must be finite");
  if (lambda < 0.0) return 0.0;
  const int n = static_cast<int>(std::floor(lambda));
  return nu / kPi * std::exp(nu * z * std::conj(w)) * specfun::laguerre(n, 1.0, nu * std::norm(z - w));
}

KernelValue heat_kernel(double nu, double t, cplx z, cplx w, Method method, int max_terms) {
  if (!(nu > 0.0)) throw DomainError("heat_kernel: nu must be positive");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat_kernel: t must be positive and finite");
  const cplx pref = nu / kPi * std::exp(nu * z * std::conj(w));
  const double x = nu * std::norm(z - w);
  const double q = std::exp(-nu * t);
  const double omq = -std::expm1(-nu * t);
  KernelValue kv;
  kv.method = method;
  if (method == Method::ClosedForm) {
    kv.value = pref / omq * std::exp(-x * q / omq);
    return kv;
  }
  // The terms reach e^{x/2} while the sum is near e^{-xq/(1-q)}, so the
  // recurrence and the accumulation run in long double.
  using ld = long double;
  const ld xl = x, ql = q;
  ld sum = 0.0L, comp = 0.0L, abs_sum = 0.0L;
  ld l0 = 1.0L, l1 = 1.0L - xl, qk = 1.0L;
  const double envelope = std::exp(0.5 * x) / omq;
  for (int k = 0; k < max_terms; ++k) {
    const ld term = qk * (k == 0 ? l0 : l1);
    const ld tsum = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - tsum) + term : (term - tsum) + sum;
    sum = tsum;
    abs_sum += std::abs(term);
    if (k >= 1) {
      const ld l2 = ((2.0L * k + 1.0L - xl) * l1 - k * l0) / (k + 1.0L);
      l0 = l1;
      l1 = l2;
    }
    qk *= ql;
    // |sum_{j>k} q^j L_j(x)| <= e^{x/2} q^{k+1} / (1-q)
    const double bound = envelope * static_cast<double>(qk);
    const double value = static_cast<double>(sum + comp);
    if (bound <= 1e-17 * std::abs(value) || bound == 0.0) {
      const double rounding = 8.0 * (k + 1) * std::numeric_limits<ld>::epsilon() * static_cast<double>(abs_sum);
      kv.value = pref * value;
      kv.terms = k + 1;
      kv.residual = std::abs(pref) * (bound + rounding);
      return kv;
    }
  }
  throw TruncationError("heat_kernel: series did not converge within " + std::to_string(max_terms) + " terms",
                        pref * static_cast<double>(sum + comp), max_terms);
}

}  // namespace bds::kernels
