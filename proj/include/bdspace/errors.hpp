// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bds {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series did not meet its tolerance within the allowed number of terms.
/// The partial sum reached so far is kept for callers that can use it.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::complex<double> partial_sum, int terms)
      : std::runtime_error(what), partial_sum_(partial_sum), terms_(terms) {}

  std::complex<double> partial_sum() const noexcept { return partial_sum_; }
  int terms() const noexcept { return terms_; }

 private:
  std::complex<double> partial_sum_;
  int terms_;
};

/// An integrand or stencil produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node) : std::runtime_error(what), node_(node) {}
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace bds
