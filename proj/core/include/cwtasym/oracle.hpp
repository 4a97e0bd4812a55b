// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include "cwtasym/quadrature.hpp"
#include "cwtasym/signals.hpp"
#include "cwtasym/wavelets.hpp"

namespace cwtasym {

/// W(b, a) = a^(-1/2) integral f(t) conj(psi((t - b)/a)) dt, evaluated as
/// a^(1/2) integral f(b + a s) conj(psi(s)) ds. Haar reduces to the panels
/// [0, 1/2] and [1/2, 1]. Requires a > 0.
QuadratureResult cwt_time(const SignalSpec& signal, const WaveletSpec& wavelet, double b, double a,
                          const QuadratureConfig& config);

/// W(b, a) = (a^(1/2) / 2 pi) integral exp(i b w) f_hat(w) conj(psi_hat(a w)) dw,
/// evaluated as (1 / (2 pi a^(1/2))) (I1 + I2) with w = +-u/a over u >= 0.
/// Requires a > 0.
QuadratureResult cwt_fourier(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                             double a, const QuadratureConfig& config);

}  // namespace cwtasym
