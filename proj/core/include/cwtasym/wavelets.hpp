// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace cwtasym {

using cplx = std::complex<double>;

enum class WaveletKind { Morlet, MexicanHat, Haar };

/// One of the built-in analysing wavelets.
///
/// Fourier convention: psi_hat(u) = integral of exp(-i u t) psi(t) dt.
/// Waveforms:
///   Morlet       psi(t) = exp(i u0 t - t^2/2),  psi_hat(u) = sqrt(2 pi) exp(-(u-u0)^2/2)
///   Mexican hat  psi(t) = (1 - t^2) exp(-t^2/2), psi_hat(u) = sqrt(2 pi) u^2 exp(-u^2/2)
///   Haar         psi = 1 on [0, 1/2), -1 on [1/2, 1), 0 elsewhere,
///                conj(psi_hat(u)) = (i/u)(1 - 2 exp(iu/2) + exp(iu))
///
/// Near u = 0, conj(psi_hat(u)) ~ sum_s c_s u^(s + lambda - 1); lambda = 1 for
/// all three.
struct WaveletSpec {
  WaveletKind kind = WaveletKind::Morlet;
  double center_frequency = 5.0;
  double lambda = 1.0;

  static WaveletSpec morlet(double u0);
  static WaveletSpec mexican_hat();
  static WaveletSpec haar();

  /// Time-domain waveform.
  cplx psi(double t) const;
  /// conj(psi_hat(u)) for real u.
  cplx psi_hat_conj(double u) const;
  /// Analytic continuation of the closed form of conj(psi_hat) to complex u.
  cplx psi_hat_conj_analytic(cplx u) const;
  /// Non-increasing bound on |conj(psi_hat(+-u))| for u >= 0.
  double psi_hat_envelope(double u) const;
  /// Non-increasing bound on |psi(+-t)| for t >= 0.
  double psi_envelope(double t) const;
  /// Shortest oscillation period of conj(psi_hat) at large |u| (0 if none).
  double fourier_period() const;
  /// Support of psi in t; infinite bounds for the Gaussian wavelets.
  double support_lo() const;
  double support_hi() const;

  std::string name() const;
};

/// Small-u expansion coefficients c_0 .. c_{n-1} of conj(psi_hat).
struct CoefficientTable {
  std::vector<cplx> coefficients;
  /// Per-coefficient error estimate; empty for closed-form tables.
  std::vector<double> error_estimates;
  double lambda = 1.0;
  int n = 0;
};

/// conj(psi_hat(u)). Haar uses its Taylor series for |u| < 1e-3.
cplx psi_hat_conj(const WaveletSpec& wavelet, double u);

/// Closed-form coefficient tables. Throws PreconditionError for n < 1.
CoefficientTable small_u_coefficients(const WaveletSpec& wavelet, int n);

/// Single closed-form coefficient c_s.
cplx small_u_coefficient(const WaveletSpec& wavelet, int s);

struct NumericTaylorOptions {
  double radius = 1.0;
  int samples = 128;
  /// Failure threshold on the disagreement between the two contour radii,
  /// relative to max(1, |c_s|).
  double tolerance = 1e-8;
};

/// Independent coefficient extractor. Taylor coefficients of
/// u^(1 - lambda) * g(u) from trapezoidal Cauchy integrals of the analytic
/// continuation g on circles of radius r and r/2; their disagreement is the
/// residual. Throws ConvergenceError when the residual exceeds tolerance
/// (non-analytic input or wrong lambda).
CoefficientTable small_u_coefficients_numeric(const std::function<cplx(cplx)>& g, double lambda,
                                              int n, const NumericTaylorOptions& options = {});

/// Truncation remainder conj(psi_hat(u)) - sum_{s<n} c_s u^(s + lambda - 1).
/// Reuse when evaluating many points.
class PsiHatTail {
 public:
  PsiHatTail(const WaveletSpec& wavelet, int n);

  cplx operator()(double u) const;

  const std::vector<cplx>& head() const { return head_; }

 private:
  WaveletSpec wavelet_;
  int n_;
  std::vector<cplx> head_;    // c_0 .. c_{n-1}
  std::vector<cplx> series_;  // c_n .. c_{n+K-1} for the small-|u| branch
};

cplx psi_hat_tail(const WaveletSpec& wavelet, double u, int n);

}  // namespace cwtasym
