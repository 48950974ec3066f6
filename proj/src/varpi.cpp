// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/varpi.hpp"

#include <algorithm>
#include <cmath>

#include "bdspace/specfun.hpp"

namespace bds::varpi {

using specfun::kPi;

namespace {

constexpr double kSwitch = 40.0;  // (k-1) t above which the v-substitution is used

void check_t(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("varpi: t must be finite and non-negative");
}

}  // namespace

VarpiTable::VarpiTable(int m, int panel_nodes, int quad_nodes, double t_max, bool tabulate_top)
    : m_(m), t_max_(t_max) {
  if (m < 1) throw DomainError("VarpiTable: m must be >= 1");
  if (panel_nodes < 4) throw DomainError("VarpiTable: panel_nodes must be >= 4");
  if (quad_nodes < 8) throw DomainError("VarpiTable: quad_nodes must be >= 8");
  if (!(t_max >= 1.0)) throw DomainError("VarpiTable: t_max must be >= 1");
  levels_.resize(m + 1);
  for (int k = 0; k <= m; ++k) {
    const double beta = k >= 2 ? 0.5 * (3 * k - 5) : 0.5;
    jacobi_.push_back(quad::make_rule(quad::RuleSpec::jacobi(0.5, beta, 0.0, 1.0), quad_nodes));
    laguerre_.push_back(quad::make_rule(quad::RuleSpec::laguerre(0.5), quad_nodes));
  }
  std::vector<double> edges{0.0, 0.5};
  while (edges.back() < t_max_) edges.push_back(std::min(2.0 * edges.back(), t_max_));
  const int top = tabulate_top ? m : m - 1;
  for (int k = 2; k <= top; ++k) {
    std::vector<Panel> panels;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      Panel p;
      p.a = edges[e];
      p.b = edges[e + 1];
      const int n = panel_nodes;
      for (int i = n - 1; i >= 0; --i) {
        const double th = kPi * (2 * i + 1) / (2.0 * n);
        const double x = 0.5 * (p.a + p.b) + 0.5 * (p.b - p.a) * std::cos(th);
        p.x.push_back(x);
        p.f.push_back(F_direct(k, x));
        // first-kind Chebyshev barycentric weights (-1)^i sin(theta_i)
        p.w.push_back((i % 2 ? -1.0 : 1.0) * std::sin(th));
      }
      panels.push_back(std::move(p));
    }
    levels_[k] = std::move(panels);
  }
}

double VarpiTable::interpolate(int k, double t) const {
  const auto& panels = levels_[k];
  auto it = std::upper_bound(panels.begin(), panels.end(), t, [](double v, const Panel& p) { return v < p.b; });
  const Panel& p = it == panels.end() ? panels.back() : *it;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    const double d = t - p.x[i];
    if (d == 0.0) return p.f[i];
    const double c = p.w[i] / d;
    num += c * p.f[i];
    den += c;
  }
  return num / den;
}

double VarpiTable::F(int k, double t) const {
  if (k <= 1) return 1.0;
  if (t <= t_max_ && !levels_[k].empty()) return interpolate(k, t);
  return F_direct(k, t);
}

double VarpiTable::F_direct(int k, double t) const {
  if (k <= 1) return 1.0;
  const double c = (k - 1) * t;
  const double pw = 0.5 * (3 * k - 5);
  if (c <= kSwitch) {
    return quad::integrate_line(jacobi_[k], [&](double u) { return F(k - 1, t * u) * std::exp(-c * (1.0 - u)); });
  }
  // v = (k-1) t (1-u): weight v^{1/2} e^{-v}, truncated where u < 0.
  const double s = quad::integrate_line(laguerre_[k], [&](double v) {
    const double u = 1.0 - v / c;
    if (u <= 0.0) return 0.0;
    return std::pow(u, pw) * F(k - 1, t * u);
  });
  return s * std::pow(c, -1.5);
}

double VarpiTable::smooth_factor(double t) const {
  check_t(t);
  return F(m_, t);
}

double VarpiTable::smooth_factor_direct(double t) const {
  check_t(t);
  return F_direct(m_, t);
}

double VarpiTable::operator()(double t) const {
  check_t(t);
  if (t == 0.0) return 0.0;
  return std::pow(t, 0.5 * (3 * m_ - 2)) * std::exp(-t) * F(m_, t);
}

std::vector<double> VarpiTable::grid() const {
  std::vector<double> g;
  if (m_ < 2) return g;
  for (const auto& p : levels_[m_]) g.insert(g.end(), p.x.begin(), p.x.end());
  return g;
}

std::vector<double> VarpiTable::values() const {
  std::vector<double> v;
  for (double t : grid()) v.push_back((*this)(t));
  return v;
}

double varpi(int m, double t) {
  if (m < 1) throw DomainError("varpi: m must be >= 1");
  check_t(t);
  if (t == 0.0) return 0.0;
  const double pre = std::pow(t, 0.5 * (3 * m - 2)) * std::exp(-t);
  if (m == 1) return pre;
  // tables for the lower levels only; the top level by direct quadrature
  return pre * VarpiTable(m, 28, 64, 1024.0, false).smooth_factor_direct(t);
}

double varpi2_closed(double t) {
  check_t(t);
  if (t == 0.0) return 0.0;
  return kPi / 8.0 * t * t * std::exp(-2.0 * t) * specfun::hyp1f1(1.5, 3.0, t);
}

double varpi_bound(int m, double t) {
  if (m < 1) throw DomainError("varpi_bound: m must be >= 1");
  check_t(t);
  if (t == 0.0) return 0.0;
  return std::pow(kPi / 8.0, m - 1) * std::pow(t, 0.5 * (3 * m - 2)) * std::exp(-t);
}

LaplaceValue varpi_laplace(const VarpiTable& table, double k, int nodes) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("varpi_laplace: k must be finite and non-negative");
  const int m = table.m();
  const double a = 0.5 * (3 * m - 2);
  // int t^a e^{-(k+1)t} F_m(t) dt = (k+1)^{-a-1} int s^a e^{-s} F_m(s/(k+1)) ds
  auto integral = [&](int n) {
    const auto rule = quad::make_rule(quad::RuleSpec::laguerre(a), n);
    return std::pow(k + 1.0, -a - 1.0) *
           quad::integrate_line(rule, [&](double s) { return table.smooth_factor(s / (k + 1.0)); });
  };
  LaplaceValue r;
  r.numeric = integral(nodes);
  r.error_estimate = std::abs(integral(2 * nodes) - r.numeric);
  double lc = m * specfun::log_gamma(1.5);
  for (int i = 1; i <= m; ++i) lc -= 1.5 * std::log(k + i);
  r.closed = std::exp(lc);
  return r;
}

LaplaceValue varpi_laplace(int m, double k, int nodes) { return varpi_laplace(VarpiTable(m), k, nodes); }

}  // namespace bds::varpi
