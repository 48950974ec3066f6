// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/spaces.hpp"

#include <cmath>
#include <limits>
#include "json.hpp"
#include <numeric>

#include "bdspace/specfun.hpp"

namespace bds::spaces {

using specfun::kPi;
using specfun::log_factorial;

void SpaceParams::validate() const {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("SpaceParams: nu must be positive and finite");
  if (m < 0) throw DomainError("SpaceParams: m must be non-negative");
}

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

PowerSeries PowerSeries::monomial(int j, cplx c) {
  if (j < 0) throw DomainError("PowerSeries::monomial: negative degree");
  std::vector<cplx> a(j + 1, 0.0);
  a[j] = c;
  return PowerSeries(std::move(a));
}

cplx PowerSeries::operator()(cplx z) const {
  cplx s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * z + *it;
  return s;
}

PowerSeries PowerSeries::derivative(int k) const {
  if (k < 0) throw DomainError("PowerSeries::derivative: negative order");
  if (k == 0) return *this;
  if (k > degree()) return PowerSeries();
  std::vector<cplx> d(coeffs_.size() - k);
  for (std::size_t j = k; j < coeffs_.size(); ++j) {
    double falling = 1.0;
    for (int i = 0; i < k; ++i) falling *= static_cast<double>(j - i);
    d[j - k] = coeffs_[j] * falling;
  }
  return PowerSeries(std::move(d));
}

std::string PowerSeries::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back({c.real(), c.imag()});
  return arr.dump();
}

PowerSeries PowerSeries::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("PowerSeries: invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw DomainError("PowerSeries: expected a JSON array");
  std::vector<cplx> a;
  for (const auto& e : j) {
    if (e.is_number()) {
      a.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      a.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw DomainError("PowerSeries: each coefficient must be a number or a [re, im] pair");
    }
  }
  return PowerSeries(std::move(a));
}

double log_monomial_norm_sq(const SpaceParams& p, int j) {
  p.validate();
  if (j < 0) throw DomainError("monomial_norm_sq: negative index");
  const double lnu = std::log(p.nu);
  const double lpi = std::log(kPi);
  if (p.m == 0 || j < p.m) return lpi + log_factorial(j) - (j + 1) * lnu;
  // j >= m >= 1: pi (j!)^2 / (nu^{j-m+1} (j-m)!)
  return lpi + 2.0 * log_factorial(j) - (j - p.m + 1) * lnu - log_factorial(j - p.m);
}

double monomial_norm_sq(const SpaceParams& p, int j) { return std::exp(log_monomial_norm_sq(p, j)); }

cplx basis_eval(const SpaceParams& p, int j, cplx z) {
  const double lnorm = 0.5 * log_monomial_norm_sq(p, j);
  if (j == 0) return std::exp(-lnorm);
  if (z == 0.0) return 0.0;
  // z^j / norm in polar form to avoid overflow of z^j for large j
  const double lr = j * std::log(std::abs(z)) - lnorm;
  return std::polar(std::exp(lr), j * std::arg(z));
}

cplx inner_product(const SpaceParams& p, const PowerSeries& f, const PowerSeries& g) {
  p.validate();
  const int n = std::min(f.degree(), g.degree());
  specfun::CompensatedSum<cplx> acc;
  for (int j = 0; j <= n; ++j) {
    const cplx ab = f.coeff(j) * std::conj(g.coeff(j));
    if (ab != 0.0) acc.add(ab * monomial_norm_sq(p, j));
  }
  return acc.value();
}

cplx inner_product_quadrature(const SpaceParams& p, const PowerSeries& f, const PowerSeries& g,
                              const quad::PlanarRule& rule) {
  p.validate();
  if (std::abs(rule.nu() - p.nu) > 1e-15 * p.nu) throw DomainError("inner_product_quadrature: rule nu differs from space nu");
  if (p.m == 0) return quad::integrate_plane(rule, [&](cplx z) { return f(z) * std::conj(g(z)); });
  auto [f1, f2] = split_series(f, p.m);
  auto [g1, g2] = split_series(g, p.m);
  const PowerSeries df = f2.derivative(p.m), dg = g2.derivative(p.m);
  return quad::integrate_plane(rule, [&](cplx z) { return f1(z) * std::conj(g1(z)) + df(z) * std::conj(dg(z)); });
}

std::pair<PowerSeries, PowerSeries> split_series(const PowerSeries& f, int m) {
  if (m < 1) throw DomainError("split_series: m must be >= 1");
  const auto& a = f.coefficients();
  std::vector<cplx> lo(a.begin(), a.begin() + std::min<std::size_t>(m, a.size()));
  std::vector<cplx> hi(a.size(), 0.0);
  for (std::size_t j = m; j < a.size(); ++j) hi[j] = a[j];
  return {PowerSeries(std::move(lo)), PowerSeries(std::move(hi))};
}

const char* to_string(MembershipClass c) {
  switch (c) {
    case MembershipClass::ConvergentEvidence: return "ConvergentEvidence";
    case MembershipClass::DivergentEvidence: return "DivergentEvidence";
    case MembershipClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

double log_membership_weight(const SpaceParams& p, int j) {
  p.validate();
  if (j < 0) throw DomainError("membership weight: negative index");
  const double lnu = std::log(p.nu);
  if (p.m == 0) return log_factorial(j) - j * lnu;
  if (j < p.m) return -std::numeric_limits<double>::infinity();
  if (p.m == 1) return std::log(static_cast<double>(j)) + log_factorial(j) - j * lnu;
  return 2.0 * log_factorial(j) - (j - p.m) * lnu - log_factorial(j - p.m);
}

MembershipVerdict membership_test(const SpaceParams& p, const PowerSeries& f, int tail_window, double eps) {
  p.validate();
  if (tail_window < 1) throw DomainError("membership_test: tail_window must be >= 1");
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("membership_test: eps must lie in (0, 1)");
  const int J = f.degree();
  std::vector<double> logt(J + 1);
  MembershipVerdict v;
  v.weighted_tail_sums.reserve(J + 1);
  double running = 0.0;
  for (int j = 0; j <= J; ++j) {
    const double a = std::abs(f.coeff(j));
    logt[j] = a == 0.0 ? -std::numeric_limits<double>::infinity() : 2.0 * std::log(a) + log_membership_weight(p, j);
    running += std::exp(logt[j]);
    v.weighted_tail_sums.push_back(running);
  }

  const int lo = std::max(0, J - tail_window);
  double ratio_sum = 0.0, bert_sum = 0.0;
  int pairs = 0;
  bool any_nonzero = false;
  for (int j = lo; j <= J; ++j) any_nonzero = any_nonzero || std::isfinite(logt[j]);
  for (int j = lo; j < J; ++j) {
    if (!std::isfinite(logt[j]) || !std::isfinite(logt[j + 1])) continue;
    const double lr = logt[j + 1] - logt[j];
    ratio_sum += std::exp(lr);
    // ln j (j (t_j/t_{j+1} - 1) - 1), with t_j/t_{j+1} - 1 = expm1(-lr)
    const double jj = std::max(j, 2);
    bert_sum += std::log(jj) * (jj * std::expm1(-lr) - 1.0);
    ++pairs;
  }
  if (!any_nonzero) {
    // identically zero tail: a polynomial, trivially in every space
    v.classification = MembershipClass::ConvergentEvidence;
    v.ratio_estimate = 0.0;
    return v;
  }
  if (pairs == 0) {
    // isolated nonzero terms only: a finite combination of monomials
    v.classification = MembershipClass::ConvergentEvidence;
    return v;
  }
  v.ratio_estimate = ratio_sum / pairs;
  v.bertrand_estimate = bert_sum / pairs;
  if (!std::isfinite(logt[J])) {
    v.classification = MembershipClass::ConvergentEvidence;
  } else if (v.ratio_estimate < 1.0 - eps) {
    v.classification = MembershipClass::ConvergentEvidence;
  } else if (v.ratio_estimate > 1.0 + eps) {
    v.classification = MembershipClass::DivergentEvidence;
  } else if (v.bertrand_estimate > 1.0 + eps) {
    v.classification = MembershipClass::ConvergentEvidence;
  } else if (v.bertrand_estimate < 1.0 - eps) {
    v.classification = MembershipClass::DivergentEvidence;
  }
  return v;
}

namespace {

cplx stencil_eval(const PlaneFunction& F, cplx z) {
  const cplx v = F(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw EvaluationError("magnetic_laplacian_fd: non-finite value at stencil point", std::abs(z));
  }
  return v;
}

cplx laplacian_once(double nu, const PlaneFunction& F, cplx z, double h) {
  const cplx f0 = stencil_eval(F, z);
  const cplx fxp = stencil_eval(F, z + h), fxm = stencil_eval(F, z - h);
  const cplx fyp = stencil_eval(F, z + cplx(0, h)), fym = stencil_eval(F, z - cplx(0, h));
  const cplx lap = (fxp + fxm + fyp + fym - 4.0 * f0) / (h * h);
  const cplx fx = (fxp - fxm) / (2.0 * h), fy = (fyp - fym) / (2.0 * h);
  // d/dz dzbar = lap / 4, d/dzbar = (d/dx + i d/dy) / 2
  return -0.25 * lap + nu * std::conj(z) * 0.5 * (fx + cplx(0, 1) * fy);
}

}  // namespace

cplx magnetic_laplacian_fd(double nu, const PlaneFunction& F, cplx z, double h) {
  if (!(nu > 0.0)) throw DomainError("magnetic_laplacian_fd: nu must be positive");
  if (!(h > 0.0)) throw DomainError("magnetic_laplacian_fd: h must be positive");
  const cplx coarse = laplacian_once(nu, F, z, h);
  const cplx fine = laplacian_once(nu, F, z, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

PlaneFunction scale_intertwiner(double nu, PlaneFunction F) {
  if (!(nu > 0.0)) throw DomainError("scale_intertwiner: nu must be positive");
  const double c = 1.0 / std::sqrt(nu);
  return [c, F = std::move(F)](cplx z) { return c * F(z * c); };
}

}  // namespace bds::spaces
