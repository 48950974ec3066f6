// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Self-verification suites: each check compares a closed form with an
 * independent route (series, quadrature, finite differences) and records the
 * residual against a tolerance.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace bds::verify {

struct Check {
  std::string name;
  std::string formula;  // what is being compared, in words
  std::complex<double> lhs{};
  std::complex<double> rhs{};
  double residual = 0.0;
  double tolerance = 0.0;  // already multiplied by tol_scale
  bool passed = false;     // residual <= tolerance
};

struct Report {
  std::string suite;
  double tol_scale = 1.0;
  std::uint64_t seed = 0;
  bool timing = false;
  double wall_time = 0.0;  // seconds; serialized only when timing is set
  std::vector<Check> checks;

  bool all_passed() const;
  /// One JSON document. Byte-identical for equal (suite, tol_scale, seed)
  /// unless timing is set.
  std::string to_json() const;
};

/// Registered suite names: all, specfun, spaces, kernels, varpi, transform.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws DomainError for an unknown suite or tol_scale <= 0.
Report run_suite(const std::string& suite, double tol_scale = 1.0, std::uint64_t seed = 20260101, bool timing = false);

}  // namespace bds::verify
