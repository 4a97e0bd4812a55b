// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <complex>

namespace cwtasym {

using cplx = std::complex<double>;

enum class SpecFunMethod { Series, ContinuedFraction, Reflection };

struct SpecFunResult {
  cplx value{};
  double abs_error_estimate = 0.0;
  SpecFunMethod method = SpecFunMethod::Series;
};

/// log Gamma(z) on a branch that is continuous away from the poles; only
/// exp(log_gamma(z)) is guaranteed to be Gamma(z). Throws DomainError at
/// non-positive integers.
cplx log_gamma(cplx z);

/// Gamma(z) for complex z (Lanczos, reflection for Re z < 1/2). Positive
/// integers up to 21 are returned exactly. Relative accuracy ~1e-13 for |z| <= 50.
SpecFunResult gamma_complex(cplx z);

/// 1 / Gamma(z); entire, exactly zero at the poles of Gamma.
cplx reciprocal_gamma(cplx z);

/// sin(pi z) with the argument reduced exactly around the nearest integer.
cplx sin_pi(cplx z);

/// Upper incomplete gamma Gamma(s, x), principal branch of x^s.
/// Continued fraction when |x| >= max(4, |s|) and x is off the negative real
/// axis; power series (with the exponential-integral path for s = 0, -1, ...)
/// otherwise. Purely imaginary x is supported.
SpecFunResult upper_incomplete_gamma(cplx s, cplx x);

/// Kummer's confluent hypergeometric function M(a, b, w) = 1F1(a; b; w).
/// Uses Kummer's transformation when Re w < 0 so that the summed series has
/// no alternating cancellation.
SpecFunResult kummer_m(cplx a, cplx b, cplx w);

/// Parabolic cylinder function D_nu(z) from the two-Kummer-series
/// decomposition. Supported box: |z| <= 30, Re nu >= -20.
SpecFunResult parabolic_cylinder_D(cplx nu, cplx z);

}  // namespace cwtasym
