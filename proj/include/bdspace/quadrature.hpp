// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quadrature.hpp
 * @brief Gauss rules (Golub-Welsch) and the line / plane integration drivers.
 *
 * Weight conventions, all implicit in the rule (integrands exclude them):
 *   GaussHermite          e^{-x^2}                     on (-inf, inf)
 *   GaussLaguerre(a)      x^a e^{-x}                   on (0, inf)
 *   GaussLegendre(a,b)    1                            on (a, b)
 *   GaussJacobi(al,be)    (b-x)^al (x-a)^be            on (a, b), default (-1, 1)
 *
 * Planar integrals compute int_C F(z) e^{-nu|z|^2} dlambda(z) with the radial
 * variable s = nu r^2 (weight e^{-s}, Gauss-Laguerre alpha = 0) and a uniform
 * trapezoid rule in the angle.
 */

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include "bdspace/errors.hpp"

namespace bds::quad {

enum class RuleKind { GaussHermite, GaussLaguerre, GaussLegendre, GaussJacobi };

/// Weight-function tag of a rule: kind plus its parameters.
struct RuleSpec {
  RuleKind kind = RuleKind::GaussLegendre;
  double alpha = 0.0;  // Laguerre exponent, or Jacobi exponent at the right end
  double beta = 0.0;   // Jacobi exponent at the left end
  double a = -1.0;     // interval for Legendre / Jacobi
  double b = 1.0;

  static RuleSpec hermite() { return {RuleKind::GaussHermite, 0, 0, 0, 0}; }
  static RuleSpec laguerre(double alpha) { return {RuleKind::GaussLaguerre, alpha, 0, 0, 0}; }
  static RuleSpec legendre(double a = -1.0, double b = 1.0) { return {RuleKind::GaussLegendre, 0, 0, a, b}; }
  static RuleSpec jacobi(double alpha, double beta, double a = -1.0, double b = 1.0) {
    return {RuleKind::GaussJacobi, alpha, beta, a, b};
  }

  std::string describe() const;
};

/// Immutable node/weight table. Nodes are strictly increasing and every
/// weight is positive; nodes whose weight underflows to zero are dropped, so
/// size() can be smaller than the requested count for large Laguerre or
/// Hermite rules.
class QuadratureRule {
 public:
  QuadratureRule(RuleSpec spec, std::vector<double> nodes, std::vector<double> weights);

  const RuleSpec& spec() const noexcept { return spec_; }
  RuleKind kind() const noexcept { return spec_.kind; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int requested() const noexcept { return requested_; }

 private:
  friend QuadratureRule make_rule(const RuleSpec&, int);
  RuleSpec spec_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int requested_ = 0;
};

/// Golub-Welsch nodes and weights, polished by Newton steps on the
/// orthonormal recurrence. Throws DomainError for count < 1, exponents <= -1
/// or an empty interval.
QuadratureRule make_rule(const RuleSpec& spec, int count);

/// sum_i w_i f(x_i). The weight function of the rule is implicit.
/// Throws EvaluationError naming the node if f is not finite there.
template <typename F>
auto integrate_line(const QuadratureRule& rule, F&& f) {
  using R = std::decay_t<decltype(f(0.0))>;
  R acc{};
  const auto& x = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    R v = f(x[i]);
    bool finite;
    if constexpr (std::is_arithmetic_v<R>) {
      finite = std::isfinite(v);
    } else {
      finite = std::isfinite(v.real()) && std::isfinite(v.imag());
    }
    if (!finite) throw EvaluationError("integrand not finite at node x = " + std::to_string(x[i]), x[i]);
    acc += w[i] * v;
  }
  return acc;
}

/// Planar Gaussian-measure rule for int_C F(z) e^{-nu|z|^2} dlambda(z).
class PlanarRule {
 public:
  PlanarRule(double nu, int radial_count = 48, int angular_count = 64);

  double nu() const noexcept { return nu_; }
  const QuadratureRule& radial() const noexcept { return radial_; }
  int angular_count() const noexcept { return angular_count_; }

 private:
  double nu_;
  QuadratureRule radial_;
  int angular_count_;
};

/// int_C F(z) e^{-nu|z|^2} dlambda(z) with the Gaussian weight implicit.
template <typename F>
std::complex<double> integrate_plane(const PlanarRule& rule, F&& f) {
  using cplx = std::complex<double>;
  const double nu = rule.nu();
  const int na = rule.angular_count();
  const auto& s = rule.radial().nodes();
  const auto& w = rule.radial().weights();
  std::vector<cplx> phase(na);
  for (int k = 0; k < na; ++k) {
    double th = 2.0 * 3.14159265358979323846 * k / na;
    phase[k] = cplx(std::cos(th), std::sin(th));
  }
  cplx acc{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double r = std::sqrt(s[i] / nu);
    cplx ring{};
    for (int k = 0; k < na; ++k) {
      cplx v = f(r * phase[k]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw EvaluationError("planar integrand not finite at radius r = " + std::to_string(r), r);
      }
      ring += v;
    }
    acc += w[i] * ring;
  }
  // r dr dtheta = ds dtheta / (2 nu); trapezoid weight 2 pi / na.
  return acc * (3.14159265358979323846 / (nu * na));
}

}  // namespace bds::quad
