// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cwtasym/wavelets.hpp"

namespace cwtasym {

enum class SignalKind { Lorentzian, TwoSidedExp, Gaussian, Custom };

/// Closed-form shapes. A signal is f(t) = amplitude * shape(t / width).
///   Lorentzian   1/(1+t^2)    f_hat(w) = pi exp(-|w|)
///   TwoSidedExp  exp(-|t|)    f_hat(w) = 2/(1+w^2)
///   Gaussian     exp(-t^2/2)  f_hat(w) = sqrt(2 pi) exp(-w^2/2)
/// Fourier convention f_hat(w) = integral of exp(-i t w) f(t) dt.
struct SignalSpec {
  SignalKind kind = SignalKind::Lorentzian;
  /// Closed-form shape; equals kind except for Custom signals.
  SignalKind family = SignalKind::Lorentzian;
  double amplitude = 1.0;
  double width = 1.0;
  /// f_hat(u) ~ sum_r tail_coeffs[r] u^(-r - tail_beta) as u -> +infinity.
  /// +infinity (with an empty list) for super-algebraic decay.
  double tail_beta = 0.0;
  std::vector<double> tail_coeffs;
  /// h(u) = O(u^rho) as u -> 0.
  double rho = 0.0;

  static SignalSpec lorentzian(double amplitude = 1.0, double width = 1.0);
  static SignalSpec two_sided_exp(double amplitude = 1.0, double width = 1.0);
  static SignalSpec gaussian(double amplitude = 1.0, double width = 1.0);
  /// User-described signal: a closed-form family plus caller-supplied tail
  /// metadata, which is taken as given.
  static SignalSpec custom(SignalKind family, double amplitude, double width, double tail_beta,
                           std::vector<double> tail_coeffs, double rho);

  double f(double t) const;
  cplx f_hat(double omega) const;
  /// Non-increasing bound on |f_hat(+-u)| for u >= 0.
  double f_hat_envelope(double u) const;
  /// Points where f is not smooth.
  std::vector<double> kinks() const;
  bool has_algebraic_tail() const;

  std::string name() const;
};

/// Parses "lorentzian", "twosidedexp" (alias "exp"), "gaussian".
SignalKind parse_signal_kind(const std::string& name);
std::string signal_kind_name(SignalKind kind);

cplx f_hat(const SignalSpec& signal, double omega);

/// h(u) = exp(i b u) f_hat(u), or its mirror h(-u) = exp(-i b u) f_hat(-u).
struct HSpec {
  SignalSpec signal;
  double b = 0.0;
  bool mirrored = false;

  cplx operator()(double u) const;
  /// Same function with the opposite orientation.
  HSpec mirror() const { return {signal, b, !mirrored}; }
  /// Oscillation frequency of the exp(i b u) phase in this orientation.
  double phase_rate() const { return mirrored ? -b : b; }
};

cplx h_eval(const HSpec& h, double u);

/// Taylor coefficients f^(s)(b)/s!, s = 0..n-1 (lambda = 1). Throws
/// PreconditionError for n < 1 or when f is not differentiable at b.
CoefficientTable time_coefficients(const SignalSpec& signal, double b, int n);

}  // namespace cwtasym
