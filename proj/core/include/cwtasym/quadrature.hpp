// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace cwtasym {

using cplx = std::complex<double>;
using ComplexFn = std::function<cplx(double)>;
using RealFn = std::function<double(double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tolerances and budgets shared by every integrator in the library.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Number of panel bisections allowed on top of the initial panel layout.
  int max_subdivisions = 2000;
  /// First cut of a half-infinite domain; the cut is doubled until the
  /// envelope tail bound is below tolerance.
  double truncation_radius = 32.0;
  /// Hard upper limit for the cut of a half-infinite domain.
  double max_truncation_radius = 1e6;
  /// Abel regularization: first epsilon and number of halvings.
  double eps0 = 0.125;
  int eps_levels = 6;

  /// Throws PreconditionError when a field is out of range.
  void validate() const;
};

struct QuadratureResult {
  cplx value{};
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Structural knowledge about an integrand that the caller declares up front.
struct IntegrandHints {
  /// Oscillation period; initial panels are at most half of it wide.
  double period = 0.0;
  /// Exponent sigma > -1 of an integrable u^sigma singularity at the left endpoint.
  double endpoint_exponent = 0.0;
  /// Characteristic length near the left endpoint. When positive, geometric
  /// breakpoints lo + scale * 2^k (k >= -3) are inserted.
  double scale = 0.0;
  /// Interior points where the integrand is not smooth.
  std::vector<double> breakpoints;
  /// Required for an infinite upper limit: non-increasing bound on |f(u)|
  /// valid beyond the truncation point.
  RealFn envelope;
};

/// Adaptive Gauss-Kronrod (21-point) integration of a complex integrand over
/// [lo, hi]; hi may be +infinity when hints.envelope is supplied. Never
/// throws on non-convergence: the result carries converged = false and an
/// honest error estimate instead.
QuadratureResult integrate(const ComplexFn& f, double lo, double hi,
                           const QuadratureConfig& config,
                           const IntegrandHints& hints = {});

/// Real-valued convenience wrapper.
QuadratureResult integrate_real(const RealFn& f, double lo, double hi,
                                const QuadratureConfig& config,
                                const IntegrandHints& hints = {});

/// Sum of two independent results (values add, error estimates add).
QuadratureResult combine(const QuadratureResult& lhs, const QuadratureResult& rhs);

}  // namespace cwtasym
