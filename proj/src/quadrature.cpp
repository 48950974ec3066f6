// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "bdspace/specfun.hpp"

namespace bds::quad {

std::string RuleSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case RuleKind::GaussHermite: os << "GaussHermite"; break;
    case RuleKind::GaussLaguerre: os << "GaussLaguerre(alpha=" << alpha << ")"; break;
    case RuleKind::GaussLegendre: os << "GaussLegendre[" << a << "," << b << "]"; break;
    case RuleKind::GaussJacobi:
      os << "GaussJacobi(alpha=" << alpha << ",beta=" << beta << ")[" << a << "," << b << "]";
      break;
  }
  return os.str();
}

QuadratureRule::QuadratureRule(RuleSpec spec, std::vector<double> nodes, std::vector<double> weights)
    : spec_(spec), nodes_(std::move(nodes)), weights_(std::move(weights)), requested_(static_cast<int>(nodes_.size())) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) throw DomainError("QuadratureRule: node/weight size mismatch");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(weights_[i] > 0.0)) throw DomainError("QuadratureRule: weights must be positive");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw DomainError("QuadratureRule: nodes must be strictly increasing");
  }
}

namespace {

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1} on the
// reference interval, with mu0 = integral of the weight. Holds n + 1
// coefficients so the orthonormal p_n is available.
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;  // b[0] unused
  double mu0 = 0.0;
};

Recurrence recurrence_for(const RuleSpec& spec, int count) {
  const int n = count + 1;
  Recurrence r;
  r.a.assign(n, 0.0);
  r.b.assign(n, 0.0);
  switch (spec.kind) {
    case RuleKind::GaussHermite:
      for (int k = 1; k < n; ++k) r.b[k] = 0.5 * k;
      r.mu0 = std::sqrt(specfun::kPi);
      break;
    case RuleKind::GaussLaguerre: {
      const double al = spec.alpha;
      for (int k = 0; k < n; ++k) r.a[k] = 2.0 * k + al + 1.0;
      for (int k = 1; k < n; ++k) r.b[k] = k * (k + al);
      r.mu0 = specfun::gamma(al + 1.0);
      break;
    }
    case RuleKind::GaussLegendre:
    case RuleKind::GaussJacobi: {
      const double al = spec.kind == RuleKind::GaussJacobi ? spec.alpha : 0.0;
      const double be = spec.kind == RuleKind::GaussJacobi ? spec.beta : 0.0;
      const double ab = al + be;
      r.a[0] = (be - al) / (ab + 2.0);
      for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        r.a[k] = (be * be - al * al) / (s * (s + 2.0));
      }
      if (n > 1) r.b[1] = 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      for (int k = 2; k < n; ++k) {
        const double s = 2.0 * k + ab;
        r.b[k] = 4.0 * k * (k + al) * (k + be) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
      }
      r.mu0 = std::exp((ab + 1.0) * std::log(2.0) + specfun::log_gamma(al + 1.0) + specfun::log_gamma(be + 1.0) -
                       specfun::log_gamma(ab + 2.0));
      break;
    }
  }
  return r;
}

// Orthonormal recurrence at x: returns p_n(x), p_n'(x) and sum_{k<n} p_k(x)^2,
// all scaled by exp(-log_scale) (the sum by exp(-2 log_scale)).
struct OrthoEval {
  double pn = 0.0;
  double dpn = 0.0;
  double sumsq = 0.0;
  double log_scale = 0.0;
};

OrthoEval ortho_eval(const Recurrence& r, int n, double x) {
  constexpr double kBig = 1e150;
  constexpr double kShrink = 1e-150;
  OrthoEval e;
  double p_prev = 0.0, dp_prev = 0.0;
  double p = 1.0 / std::sqrt(r.mu0), dp = 0.0;
  for (int k = 0; k < n; ++k) {
    e.sumsq += p * p;
    const double sb_next = std::sqrt(r.b[k + 1]);
    const double sb = k > 0 ? std::sqrt(r.b[k]) : 0.0;
    const double p_next = ((x - r.a[k]) * p - sb * p_prev) / sb_next;
    const double dp_next = (p + (x - r.a[k]) * dp - sb * dp_prev) / sb_next;
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
    if (std::abs(p) > kBig || std::abs(dp) > kBig) {
      p *= kShrink;
      dp *= kShrink;
      p_prev *= kShrink;
      dp_prev *= kShrink;
      e.sumsq *= kShrink * kShrink;
      e.log_scale += std::log(kBig);
    }
  }
  e.pn = p;
  e.dpn = dp;
  return e;
}

}  // namespace

QuadratureRule make_rule(const RuleSpec& spec, int count) {
  if (count < 1) throw DomainError("make_rule: count must be >= 1");
  if (spec.kind == RuleKind::GaussLaguerre && !(spec.alpha > -1.0))
    throw DomainError("make_rule: Laguerre exponent must be > -1");
  if (spec.kind == RuleKind::GaussJacobi && (!(spec.alpha > -1.0) || !(spec.beta > -1.0)))
    throw DomainError("make_rule: Jacobi exponents must be > -1");
  if ((spec.kind == RuleKind::GaussLegendre || spec.kind == RuleKind::GaussJacobi) && !(spec.b > spec.a))
    throw DomainError("make_rule: interval must be non-empty");

  const int n = count;
  const Recurrence r = recurrence_for(spec, n);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag[k] = r.a[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(r.b[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EvaluationError("make_rule: tridiagonal eigensolver failed", 0.0);

  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(n);
  weights.reserve(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    // Newton polish: eigenvalues carry absolute error ~ eps * |J|, which is
    // large relative to the smallest Laguerre nodes.
    for (int it = 0; it < 3; ++it) {
      const OrthoEval e = ortho_eval(r, n, x);
      if (e.dpn == 0.0) break;
      const double step = e.pn / e.dpn;
      if (!std::isfinite(step)) break;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    const OrthoEval e = ortho_eval(r, n, x);
    const double w = std::exp(-2.0 * e.log_scale) / e.sumsq;
    if (!(w > 0.0) || !std::isfinite(w)) continue;
    nodes.push_back(x);
    weights.push_back(w);
  }

  if (spec.kind == RuleKind::GaussLegendre || spec.kind == RuleKind::GaussJacobi) {
    const double half = 0.5 * (spec.b - spec.a);
    const double mid = 0.5 * (spec.a + spec.b);
    const double ex = spec.kind == RuleKind::GaussJacobi ? spec.alpha + spec.beta : 0.0;
    const double scale = std::pow(half, ex + 1.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      nodes[i] = mid + half * nodes[i];
      weights[i] *= scale;
    }
  }
  QuadratureRule rule(spec, std::move(nodes), std::move(weights));
  rule.requested_ = count;
  return rule;
}

PlanarRule::PlanarRule(double nu, int radial_count, int angular_count)
    : nu_(nu), radial_(make_rule(RuleSpec::laguerre(0.0), radial_count)), angular_count_(angular_count) {
  if (!(nu > 0.0)) throw DomainError("PlanarRule: nu must be positive");
  if (angular_count < 1) throw DomainError("PlanarRule: angular_count must be >= 1");
}

}  // namespace bds::quad
