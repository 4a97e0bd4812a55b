// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/oracle.hpp"

#include <cmath>
#include <numbers>

#include "cwtasym/error.hpp"
#include "tails.hpp"

namespace cwtasym {

namespace {

constexpr double kPi = std::numbers::pi;

void check_scale(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("cwt: a must be positive and finite");
  if (!std::isfinite(b)) throw PreconditionError("cwt: b must be finite");
}

QuadratureResult scaled(QuadratureResult r, double factor) {
  r.value *= factor;
  r.abs_error_estimate *= std::abs(factor);
  return r;
}

}  // namespace

QuadratureResult cwt_time(const SignalSpec& signal, const WaveletSpec& wavelet, double b, double a,
                          const QuadratureConfig& config) {
  check_scale(a, b);
  config.validate();
  std::vector<double> kinks;
  for (double t : signal.kinks()) kinks.push_back((t - b) / a);

  if (wavelet.kind == WaveletKind::Haar) {
    const RealFn g = [&](double s) { return signal.f(b + a * s); };
    IntegrandHints first;
    IntegrandHints second;
    for (double k : kinks) {
      if (k > 0.0 && k < 0.5) first.breakpoints.push_back(k);
      if (k > 0.5 && k < 1.0) second.breakpoints.push_back(k);
    }
    QuadratureResult lo = integrate_real(g, 0.0, 0.5, config, first);
    QuadratureResult hi = integrate_real(g, 0.5, 1.0, config, second);
    hi.value = -hi.value;
    return scaled(combine(lo, hi), std::sqrt(a));
  }

  // Fold s < 0 onto s > 0 so the tolerance applies to the cancelled total.
  const double bound = std::abs(signal.amplitude);
  const ComplexFn f = [&](double s) {
    return signal.f(b + a * s) * std::conj(wavelet.psi(s)) +
           signal.f(b - a * s) * std::conj(wavelet.psi(-s));
  };
  IntegrandHints hints;
  for (double k : kinks) {
    if (k != 0.0) hints.breakpoints.push_back(std::abs(k));
  }
  if (wavelet.kind == WaveletKind::Morlet) hints.period = 2.0 * kPi / wavelet.center_frequency;
  hints.scale = 1.0;
  hints.envelope = [&wavelet, bound](double s) { return 2.0 * bound * wavelet.psi_envelope(s); };
  return scaled(integrate(f, 0.0, kInf, config, hints), std::sqrt(a));
}

QuadratureResult cwt_fourier(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                             double a, const QuadratureConfig& config) {
  check_scale(a, b);
  config.validate();
  double period = b != 0.0 ? 2.0 * kPi * a / std::abs(b) : 0.0;
  const double wp = wavelet.fourier_period();
  if (wp > 0.0) period = period > 0.0 ? std::min(period, wp) : wp;

  // I1 + I2 as one integrand over u >= 0.
  const ComplexFn f = [&](double u) {
    const cplx phase = std::exp(cplx(0.0, b * u / a));
    return phase * signal.f_hat(u / a) * wavelet.psi_hat_conj(u) +
           std::conj(phase) * signal.f_hat(-u / a) * wavelet.psi_hat_conj(-u);
  };
  IntegrandHints hints;
  hints.period = period;
  hints.scale = std::min(a / signal.width, 1.0);
  if (wavelet.kind == WaveletKind::Morlet) hints.breakpoints.push_back(wavelet.center_frequency);
  hints.envelope = [&](double u) {
    return 2.0 * signal.f_hat_envelope(u / a) * wavelet.psi_hat_envelope(u);
  };
  const double scale = 1.0 / (2.0 * kPi * std::sqrt(a));
  if (wavelet.kind == WaveletKind::Haar && signal.has_algebraic_tail()) {
    // Both transforms decay algebraically; integrate a finite head and add the
    // tail in closed form.
    const double split = std::max(64.0, 64.0 * a / signal.width);
    const QuadratureResult head = integrate(f, 0.0, split, config, hints);
    return scaled(combine(head, detail::haar_algebraic_tail(signal, b, a, split)), scale);
  }
  return scaled(integrate(f, 0.0, kInf, config, hints), scale);
}

}  // namespace cwtasym
