// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/bargmann.hpp"

#include <boost/math/interpolators/makima.hpp>
#include <cmath>
#include <limits>

#include "bdspace/kernels.hpp"
#include "bdspace/specfun.hpp"

namespace bds::bargmann {

using specfun::kPi;

const char* to_string(TransformMethod m) {
  switch (m) {
    case TransformMethod::BasisSeries: return "series";
    case TransformMethod::ClosedIntegral: return "integral";
    case TransformMethod::ClosedVarpi2: return "integral-varpi2";
  }
  return "integral";
}

void TransformKernelSpec::validate() const {
  params.validate();
  if (series_terms < 0) throw DomainError("TransformKernelSpec: series_terms must be >= 0");
  if (t_nodes < 8) throw DomainError("TransformKernelSpec: t_nodes must be >= 8");
  if (max_t_nodes < t_nodes) throw DomainError("TransformKernelSpec: max_t_nodes must be >= t_nodes");
  if (!(rel_tol > 0.0)) throw DomainError("TransformKernelSpec: rel_tol must be positive");
  if (method == TransformMethod::ClosedVarpi2 && params.m != 2) {
    throw DomainError("TransformKernelSpec: the varpi_2 closed route needs m = 2");
  }
}

cplx classic_kernel(cplx z, double x) {
  return std::pow(kPi, -0.75) * std::exp(-0.5 * x * x + std::sqrt(2.0) * x * z - 0.5 * z * z);
}

TransformEngine::TransformEngine(const TransformKernelSpec& spec) : spec_(spec) {
  spec_.validate();
  const int m = spec_.params.m;
  if (spec_.method == TransformMethod::BasisSeries || m == 0) return;
  if (spec_.method == TransformMethod::ClosedIntegral) table_ = std::make_shared<varpi::VarpiTable>(m);
  const double a = 0.5 * (3 * m - 2);
  for (int n = spec_.t_nodes; n <= spec_.max_t_nodes; n *= 2) {
    t_rules_.push_back(quad::make_rule(quad::RuleSpec::laguerre(a), n));
  }
}

double TransformEngine::smooth_factor(double t) const {
  if (spec_.params.m == 1) return 1.0;
  if (spec_.method == TransformMethod::ClosedVarpi2) {
    // varpi_2(t) = t^2 e^{-t} F_2(t), F_2(t) = (pi/8) e^{-t} 1F1(3/2; 3; t)
    if (t <= 700.0) return kPi / 8.0 * std::exp(-t) * specfun::hyp1f1(1.5, 3.0, t);
    // leading asymptotic Gamma(3)/Gamma(3/2) t^{-3/2}; such nodes carry weight below e^{-700}
    return kPi / 8.0 * 4.0 / std::sqrt(kPi) * std::pow(t, -1.5);
  }
  return table_->smooth_factor(t);
}

TransformResult TransformEngine::closed_kernel(cplx z, double x) const {
  const double nu = spec_.params.nu;
  const int m = spec_.params.m;
  const double pref = std::sqrt(nu) * std::pow(kPi, -0.75);
  TransformResult r;
  r.method = spec_.method;
  if (m == 0) {
    r.value = pref * std::exp(x * std::sqrt(2.0 * nu) * z - 0.5 * nu * z * z);
    return r;
  }
  // finite head sum_{k<m} (sqrt(nu/2) z)^k H_k(x) / k!
  const cplx sz = std::sqrt(0.5 * nu) * z;
  specfun::CompensatedSum<cplx> head;
  cplx pw = 1.0;
  double h0 = 1.0, h1 = 2.0 * x, fact = 1.0;
  for (int k = 0; k < m; ++k) {
    const double hk = k == 0 ? h0 : h1;
    head.add(pw * hk / fact);
    if (k >= 1) {
      const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
      h0 = h1;
      h1 = h2;
    }
    pw *= sz;
    fact *= (k + 1);
  }
  if (z == 0.0) {
    r.value = pref * head.value();
    return r;
  }
  cplx zm = 1.0;
  for (int k = 0; k < m; ++k) zm *= z;
  const cplx c = std::pow(2.0 / kPi, 0.5 * m) * zm;
  auto integral = [&](const quad::QuadratureRule& rule) {
    specfun::CompensatedSum<cplx> acc;
    const auto& t = rule.nodes();
    const auto& w = rule.weights();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const cplx s = sz * std::exp(-t[i]);
      const cplx g = std::exp(2.0 * x * s - s * s) * specfun::hermite_poly(m, cplx(x) - s);
      acc.add(w[i] * smooth_factor(t[i]) * g);
    }
    return acc.value();
  };
  cplx prev = integral(t_rules_.front());
  cplx cur = prev;
  int used = t_rules_.front().requested();
  double diff = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < t_rules_.size(); ++k) {
    cur = integral(t_rules_[k]);
    used = t_rules_[k].requested();
    diff = std::abs(cur - prev);
    if (diff <= spec_.rel_tol * std::abs(cur)) break;
    prev = cur;
  }
  r.value = pref * (head.value() + c * cur);
  r.terms = used;
  r.residual = std::isfinite(diff) ? pref * std::abs(c) * diff : std::numeric_limits<double>::infinity();
  return r;
}

TransformResult TransformEngine::series_kernel(cplx z, double x) const {
  const SpaceParams& p = spec_.params;
  const int fixed = spec_.series_terms;
  const int limit = fixed > 0 ? fixed : 5000;
  const double cramer = std::pow(kPi, -0.25) * std::exp(0.5 * x * x);
  const double az = std::abs(z);
  specfun::CompensatedSum<cplx> sum;
  double phi_prev = 0.0, phi = std::pow(kPi, -0.25);
  TransformResult r;
  r.method = TransformMethod::BasisSeries;
  auto ratio = [&](int j) {  // |psi_{j+1}(z) / psi_j(z)|
    return az * std::exp(0.5 * (spaces::log_monomial_norm_sq(p, j) - spaces::log_monomial_norm_sq(p, j + 1)));
  };
  double bound = std::numeric_limits<double>::infinity();
  int j = 0;
  for (; j < limit; ++j) {
    const cplx psi = spaces::basis_eval(p, j, z);
    sum.add(phi * psi);
    const double next = std::sqrt(2.0 / (j + 1)) * x * phi - std::sqrt(static_cast<double>(j) / (j + 1)) * phi_prev;
    phi_prev = phi;
    phi = next;
    if (az == 0.0) {
      bound = 0.0;
      ++j;
      break;
    }
    // tail sum_{i>j} |phi_i psi_i| <= cramer |psi_{j+1}| / (1 - r), once the ratio decreases below one
    const double r1 = ratio(j), r2 = ratio(j + 1);
    if (j >= p.m && r2 < 1.0 && r2 <= r1) {
      bound = cramer * std::abs(psi) * r1 / (1.0 - r2);
      if (fixed == 0 && (bound <= spec_.rel_tol * std::abs(sum.value()) || bound == 0.0)) {
        ++j;
        break;
      }
    } else {
      bound = std::numeric_limits<double>::infinity();
    }
  }
  r.value = sum.value();
  r.terms = j;
  r.residual = bound;
  return r;
}

TransformResult TransformEngine::kernel(cplx z, double x) const {
  if (!std::isfinite(x) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("transform kernel: arguments must be finite");
  }
  TransformResult r = spec_.method == TransformMethod::BasisSeries ? series_kernel(z, x) : closed_kernel(z, x);
  if (spec_.include_gaussian) {
    const double g = std::exp(-0.5 * x * x);
    r.value *= g;
    r.residual *= g;
  }
  return r;
}

std::vector<cplx> TransformEngine::kernel_column(cplx z, const quad::QuadratureRule& x_rule) const {
  if (x_rule.kind() != quad::RuleKind::GaussHermite) throw DomainError("kernel_column: rule must be Gauss-Hermite");
  std::vector<cplx> col;
  col.reserve(x_rule.size());
  for (double x : x_rule.nodes()) {
    col.push_back(spec_.method == TransformMethod::BasisSeries ? series_kernel(z, x).value : closed_kernel(z, x).value);
  }
  return col;
}

TransformResult dirichlet_kernel(double nu, cplx z, double x, TransformKernelSpec spec) {
  spec.params = {nu, 1};
  return TransformEngine(spec).kernel(z, x);
}

TransformResult generalized_kernel(double nu, int m, cplx z, double x, TransformKernelSpec spec) {
  if (m < 2) throw DomainError("generalized_kernel: m must be >= 2");
  spec.params = {nu, m};
  return TransformEngine(spec).kernel(z, x);
}

cplx transform_apply(const std::vector<cplx>& column, const RealFunction& phi, const quad::QuadratureRule& x_rule) {
  if (x_rule.kind() != quad::RuleKind::GaussHermite) throw DomainError("transform_apply: rule must be Gauss-Hermite");
  if (column.size() != static_cast<std::size_t>(x_rule.size())) throw DomainError("transform_apply: column size mismatch");
  const auto& x = x_rule.nodes();
  const auto& w = x_rule.weights();
  specfun::CompensatedSum<cplx> acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = phi(x[i]);
    if (!std::isfinite(v)) throw EvaluationError("transform_apply: phi not finite at x = " + std::to_string(x[i]), x[i]);
    if (v == 0.0) continue;
    acc.add(w[i] * column[i] * (v * std::exp(0.5 * x[i] * x[i])));
  }
  return acc.value();
}

cplx transform_apply(const TransformEngine& engine, const RealFunction& phi, cplx z, const quad::QuadratureRule& x_rule) {
  return transform_apply(engine.kernel_column(z, x_rule), phi, x_rule);
}

double hermite_function(int j, double x) { return specfun::hermite_orthonormal(j, x) * std::exp(-0.5 * x * x); }

RealFunction hermite_expansion(std::vector<double> coeffs) {
  return [c = std::move(coeffs)](double x) {
    if (c.empty()) return 0.0;
    std::vector<double> phi(c.size());
    specfun::hermite_orthonormal_all(static_cast<int>(c.size()), x, phi.data());
    double s = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * phi[j];
    return s * std::exp(-0.5 * x * x);
  };
}

RealFunction sampled_function(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) throw DomainError("sampled_function: x and y sizes differ");
  if (x.size() < 4) throw DomainError("sampled_function: need at least four samples");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw DomainError("sampled_function: abscissae must be strictly increasing");
  }
  const double lo = x.front(), hi = x.back();
  using Interp = boost::math::interpolators::makima<std::vector<double>>;
  auto interp = std::make_shared<Interp>(std::move(x), std::move(y));
  return [interp, lo, hi](double t) { return t < lo || t > hi ? 0.0 : (*interp)(t); };
}

CircleSampler::CircleSampler(const TransformEngine& engine, double radius, int points, int hermite_nodes)
    : radius_(radius), points_(points), x_rule_(quad::make_rule(quad::RuleSpec::hermite(), hermite_nodes)) {
  if (!(radius > 0.0)) throw DomainError("CircleSampler: radius must be positive");
  if (points < 1) throw DomainError("CircleSampler: points must be >= 1");
  params_ = engine.spec().params;
  for (int n = 0; n < points; ++n) {
    columns_.push_back(engine.kernel_column(std::polar(radius, 2.0 * kPi * n / points), x_rule_));
  }
}

std::vector<cplx> CircleSampler::coefficients(const RealFunction& phi) const {
  std::vector<cplx> vals(points_);
  for (int n = 0; n < points_; ++n) vals[n] = transform_apply(columns_[n], phi, x_rule_);
  std::vector<cplx> a(points_);
  for (int k = 0; k < points_; ++k) {
    cplx s = 0.0;
    for (int n = 0; n < points_; ++n) s += vals[n] * std::polar(1.0, -2.0 * kPi * k * n / points_);
    a[k] = s / (points_ * std::pow(radius_, k));
  }
  return a;
}

IsometryResult isometry_check(const SpaceParams& p, const std::vector<cplx>& lambda, const CircleSampler* sampler) {
  p.validate();
  if (lambda.empty()) throw DomainError("isometry_check: need at least one coefficient");
  IsometryResult r;
  std::vector<cplx> image(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    r.input_norm += std::norm(lambda[j]);
    image[j] = lambda[j] * std::exp(-0.5 * spaces::log_monomial_norm_sq(p, static_cast<int>(j)));
  }
  const spaces::PowerSeries g(image);
  r.output_norm = spaces::inner_product(p, g, g).real();
  if (sampler != nullptr) {
    if (sampler->params().nu != p.nu || sampler->params().m != p.m) {
      throw DomainError("isometry_check: sampler built for different space parameters");
    }
    if (static_cast<std::size_t>(sampler->points()) <= lambda.size()) {
      throw DomainError("isometry_check: sampler needs more points than coefficients");
    }
    std::vector<double> re(lambda.size()), im(lambda.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      re[j] = lambda[j].real();
      im[j] = lambda[j].imag();
    }
    auto a = sampler->coefficients(hermite_expansion(re));
    auto b = sampler->coefficients(hermite_expansion(im));
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += cplx(0, 1) * b[k];
    const spaces::PowerSeries h(a);
    r.numerical_norm = spaces::inner_product(p, h, h).real();
  }
  return r;
}

std::pair<double, double> kernel_norm_bound_check(const SpaceParams& p, cplx z) {
  p.validate();
  const double lhs = kernels::reproducing_kernel_series_adaptive(p, z, z).value.real();
  const double e = std::exp(p.nu * std::norm(z));
  double rhs;
  if (p.m == 0) {
    rhs = p.nu / kPi * e;
  } else if (p.m == 1) {
    rhs = (p.nu + e) / kPi;
  } else {
    rhs = p.nu / kPi * (1.0 + std::pow(std::abs(z), 2 * p.m)) * e;
  }
  return {lhs, rhs};
}

DivergenceDemo fock_derivative_divergence_demo(double nu, int m, int J) {
  if (!(nu > 0.0)) throw DomainError("fock_derivative_divergence_demo: nu must be positive");
  if (m < 1) throw DomainError("fock_derivative_divergence_demo: m must be >= 1");
  if (J < 10) throw DomainError("fock_derivative_divergence_demo: J must be >= 10");
  DivergenceDemo d;
  d.terms.reserve(J);
  const double lead = std::log(kPi) + m * std::log(nu);
  double running = 0.0;
  for (int j = 0; j < J; ++j) {
    double lt = lead;
    for (int i = 1; i <= m; ++i) lt += 2.0 * std::log(j + static_cast<double>(i));
    for (int i = 1; i <= m + 2; ++i) lt -= std::log(j + static_cast<double>(i));
    const double t = std::exp(lt);
    running += t;
    d.terms.push_back(t);
    d.partial_sums.push_back(running);
    d.limit_ratios.push_back(std::exp(lt - lead - (m - 2) * std::log(j + 1.0)));
  }
  return d;
}

}  // namespace bds::bargmann
