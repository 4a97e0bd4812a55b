// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwtasym/mellin.hpp"
#include "cwtasym/quadrature.hpp"
#include "cwtasym/signals.hpp"
#include "cwtasym/wavelets.hpp"

namespace cwtasym {

enum class RemainderKind { IntegralM0, Empirical, None };

const char* remainder_kind_name(RemainderKind kind);

struct ExpansionOptions {
  /// Compute delta_n from its m = 0 integral representation.
  bool integral_remainder = false;
  /// Measure delta_n as (oracle - partial_sum) / prefactor. Ignored when
  /// integral_remainder is set.
  bool empirical_remainder = false;
  MellinMethod mellin_method = MellinMethod::Auto;
  /// Flips the sign factor of the mirrored branch (fault injection for the
  /// self-validation suite).
  bool negate_mirrored_branch = false;
};

/// The a-independent part of an expansion: term s is
/// factors[s] * a^exponents[s].
struct ExpansionSeries {
  std::vector<cplx> factors;
  std::vector<double> factor_errors;
  std::vector<double> exponents;
  double lambda = 1.0;
  int n = 0;
  /// 1/(2 pi) for the frequency-domain family, 1 for the time-domain family.
  double remainder_prefactor = 1.0;
  std::vector<std::string> warnings;

  std::vector<cplx> terms(double a) const;
};

struct ExpansionResult {
  std::vector<cplx> terms;
  cplx partial_sum{};
  /// Propagated error of the moment factors, scaled to this a.
  double partial_sum_error = 0.0;
  /// delta_n, unscaled: the transform equals
  /// partial_sum + remainder_prefactor * remainder_estimate.
  std::optional<cplx> remainder_estimate;
  double remainder_error = 0.0;
  double remainder_prefactor = 1.0;
  RemainderKind remainder_kind = RemainderKind::None;
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  double lambda = 1.0;
  std::vector<std::string> warnings;

  /// |remainder_prefactor * remainder_estimate|, or 0 when absent.
  double scaled_remainder() const;
};

/// Frequency-domain expansion: term s is
/// (1/2 pi) c_s (M[h; s+lambda] + e^{i pi (s+lambda+1)} M[h(-u); s+lambda]) a^(s+lambda-1/2).
ExpansionSeries frequency_series(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                 int n, const QuadratureConfig& config,
                                 const ExpansionOptions& options = {});

ExpansionResult expand_frequency(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                 double a, int n, const QuadratureConfig& config,
                                 const ExpansionOptions& options = {});

/// delta_n = a^(-1/2) lim_{eps->0+} integral_0^inf [psi_hat_n(u) h(u/a) + psi_hat_n(-u) h(-u/a)]
/// exp(-eps u) du, unscaled (the transform carries it with prefactor 1/2 pi).
QuadratureResult remainder_frequency(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                     double a, int n, const QuadratureConfig& config);

/// Time-domain expansion with g(t) = f(t + b) = sum_s d_s t^s: term s is
/// d_s (M[conj psi; s+1] + (-1)^s M[conj psi(-t); s+1]) a^(s+1/2).
ExpansionSeries time_series(const SignalSpec& signal, const WaveletSpec& wavelet, double b, int n,
                            const QuadratureConfig& config);

ExpansionResult expand_time(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                            double a, int n, const QuadratureConfig& config,
                            const ExpansionOptions& options = {});

/// delta_n = a^(1/2) integral_0^inf [g_n(a s) conj psi(s) + g_n(-a s) conj psi(-s)] ds
/// with g_n the Taylor remainder of f(b + t); prefactor 1.
QuadratureResult remainder_time(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                double a, int n, const QuadratureConfig& config);

/// Time-domain Morlet series with moments from parabolic cylinder functions.
ExpansionSeries morlet_time_series(const SignalSpec& signal, double b, int n, double omega0);

ExpansionResult expand_morlet_time(const SignalSpec& signal, double b, double a, int n,
                                   double omega0, const QuadratureConfig& config,
                                   const ExpansionOptions& options = {});

/// Least-squares slope of log(errors) against log(a_grid). Requires at least
/// four points, distinct positive a and positive errors.
double convergence_order(const std::vector<double>& a_grid, const std::vector<double>& errors);

}  // namespace cwtasym
