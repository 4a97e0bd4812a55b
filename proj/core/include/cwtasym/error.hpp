// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <stdexcept>
#include <string>

namespace cwtasym {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument or a mathematical hypothesis of the called operation is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Argument lies on a pole or outside the range where an evaluator is supported.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure (series, continued fraction, quadrature, extrapolation)
/// did not reach its tolerance. `residual()` is the last achieved error measure.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace cwtasym
