// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cwtasym/error.hpp"

namespace cwtasym {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);
constexpr cplx kI{0.0, 1.0};

// Terms kept past c_{n-1} in the small-|u| branch of PsiHatTail.
constexpr int kTailSeriesTerms = 100;

double log_factorial(int k) {
  static constexpr double kExact[21] = {1.0,
                                        1.0,
                                        2.0,
                                        6.0,
                                        24.0,
                                        120.0,
                                        720.0,
                                        5040.0,
                                        40320.0,
                                        362880.0,
                                        3628800.0,
                                        39916800.0,
                                        479001600.0,
                                        6227020800.0,
                                        87178291200.0,
                                        1307674368000.0,
                                        20922789888000.0,
                                        355687428096000.0,
                                        6402373705728000.0,
                                        121645100408832000.0,
                                        2432902008176640000.0};
  if (k <= 20) return std::log(kExact[k]);
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double factorial(int k) {
  if (k <= 20) {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
  }
  return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
}

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

cplx haar_coefficient(int s) {
  if (s == 0) return {0.0, 0.0};
  return i_power(s + 2) * ((1.0 - std::ldexp(1.0, -s)) / factorial(s + 1));
}

// sqrt(2 pi) e^{-u0^2/2} sum_p (-1)^p u0^{s-2p} / (p! (s-2p)! 2^p), each term
// assembled in log space.
double morlet_coefficient(double u0, int s) {
  const double log_k = 0.5 * std::log(2.0 * kPi) - 0.5 * u0 * u0;
  double sum = 0.0;
  for (int p = 0; 2 * p <= s; ++p) {
    const int q = s - 2 * p;
    if (u0 == 0.0 && q > 0) continue;
    const double log_u = q > 0 ? q * std::log(u0) : 0.0;
    const double mag =
        std::exp(log_k + log_u - log_factorial(p) - log_factorial(q) - p * std::numbers::ln2);
    sum += (p % 2 == 0) ? mag : -mag;
  }
  return sum;
}

double mexican_hat_coefficient(int s) {
  if (s == 0 || s % 2 != 0) return 0.0;
  const int l = s / 2;
  const double sign = ((l - 1) % 2 == 0) ? 1.0 : -1.0;
  return sign * kSqrt2Pi / (std::ldexp(1.0, l - 1) * factorial(l - 1));
}

// Tail coefficients c_n .. c_{n+count-1} by stable recurrences.
std::vector<cplx> series_coefficients(const WaveletSpec& w, int first, int count) {
  std::vector<cplx> out(static_cast<std::size_t>(count));
  switch (w.kind) {
    case WaveletKind::Morlet: {
      // c_s = K He_s(u0) / s!, with h_{s+1} = (u0 h_s - h_{s-1}) / (s+1).
      const double u0 = w.center_frequency;
      const double k = kSqrt2Pi * std::exp(-0.5 * u0 * u0);
      double cur = 1.0;     // h_0
      double before = 0.0;  // h_{-1}
      for (int s = 0; s < first + count; ++s) {
        if (s >= first) out[static_cast<std::size_t>(s - first)] = k * cur;
        const double next = (u0 * cur - before) / (s + 1);
        before = cur;
        cur = next;
      }
      break;
    }
    case WaveletKind::MexicanHat:
      for (int j = 0; j < count; ++j) {
        out[static_cast<std::size_t>(j)] = mexican_hat_coefficient(first + j);
      }
      break;
    case WaveletKind::Haar:
      for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = haar_coefficient(first + j);
      break;
  }
  return out;
}

cplx haar_series(cplx u) {
  cplx sum = 0.0;
  cplx power = 1.0;
  for (int s = 0; s < 8; ++s) {
    sum += haar_coefficient(s) * power;
    power *= u;
  }
  return sum;
}

}  // namespace

WaveletSpec WaveletSpec::morlet(double u0) {
  if (!(u0 > 0.0) || !std::isfinite(u0)) {
    throw PreconditionError("morlet: center frequency must be positive and finite");
  }
  return {WaveletKind::Morlet, u0, 1.0};
}

WaveletSpec WaveletSpec::mexican_hat() { return {WaveletKind::MexicanHat, 0.0, 1.0}; }

WaveletSpec WaveletSpec::haar() { return {WaveletKind::Haar, 0.0, 1.0}; }

cplx WaveletSpec::psi(double t) const {
  switch (kind) {
    case WaveletKind::Morlet:
      return std::exp(cplx(-0.5 * t * t, center_frequency * t));
    case WaveletKind::MexicanHat:
      return (1.0 - t * t) * std::exp(-0.5 * t * t);
    case WaveletKind::Haar:
      if (t >= 0.0 && t < 0.5) return 1.0;
      if (t >= 0.5 && t < 1.0) return -1.0;
      return 0.0;
  }
  return 0.0;
}

cplx WaveletSpec::psi_hat_conj(double u) const {
  switch (kind) {
    case WaveletKind::Morlet: {
      const double d = u - center_frequency;
      return kSqrt2Pi * std::exp(-0.5 * d * d);
    }
    case WaveletKind::MexicanHat:
      return kSqrt2Pi * u * u * std::exp(-0.5 * u * u);
    case WaveletKind::Haar: {
      if (std::abs(u) < 1e-3) return haar_series(u);
      const double s = std::sin(0.25 * u);
      return -4.0 * kI * std::exp(cplx(0.0, 0.5 * u)) * (s * s / u);
    }
  }
  return 0.0;
}

cplx WaveletSpec::psi_hat_conj_analytic(cplx u) const {
  switch (kind) {
    case WaveletKind::Morlet: {
      const cplx d = u - center_frequency;
      return kSqrt2Pi * std::exp(-0.5 * d * d);
    }
    case WaveletKind::MexicanHat:
      return kSqrt2Pi * u * u * std::exp(-0.5 * u * u);
    case WaveletKind::Haar:
      if (std::abs(u) < 1e-3) return haar_series(u);
      return kI / u * (1.0 - 2.0 * std::exp(kI * u * 0.5) + std::exp(kI * u));
  }
  return 0.0;
}

double WaveletSpec::psi_hat_envelope(double u) const {
  u = std::abs(u);
  switch (kind) {
    case WaveletKind::Morlet: {
      const double d = std::max(u - center_frequency, 0.0);
      return kSqrt2Pi * std::exp(-0.5 * d * d);
    }
    case WaveletKind::MexicanHat:
      return kSqrt2Pi * (u <= std::numbers::sqrt2 ? 2.0 * std::exp(-1.0) : u * u * std::exp(-0.5 * u * u));
    case WaveletKind::Haar:
      return u <= 4.0 ? 1.0 : 4.0 / u;
  }
  return 0.0;
}

double WaveletSpec::psi_envelope(double t) const {
  t = std::abs(t);
  switch (kind) {
    case WaveletKind::Morlet:
      return std::exp(-0.5 * t * t);
    case WaveletKind::MexicanHat:
      // (1 + t^2) e^{-t^2/2} dominates |psi| and decreases for t >= 1.
      if (t <= 1.0) return 2.0 * std::exp(-0.5);
      return (1.0 + t * t) * std::exp(-0.5 * t * t);
    case WaveletKind::Haar:
      return t <= 1.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

double WaveletSpec::fourier_period() const {
  return kind == WaveletKind::Haar ? 2.0 * kPi : 0.0;
}

double WaveletSpec::support_lo() const { return kind == WaveletKind::Haar ? 0.0 : -std::numeric_limits<double>::infinity(); }

double WaveletSpec::support_hi() const { return kind == WaveletKind::Haar ? 1.0 : std::numeric_limits<double>::infinity(); }

std::string WaveletSpec::name() const {
  switch (kind) {
    case WaveletKind::Morlet:
      return "morlet";
    case WaveletKind::MexicanHat:
      return "mexhat";
    case WaveletKind::Haar:
      return "haar";
  }
  return "unknown";
}

cplx psi_hat_conj(const WaveletSpec& wavelet, double u) { return wavelet.psi_hat_conj(u); }

cplx small_u_coefficient(const WaveletSpec& wavelet, int s) {
  if (s < 0) throw PreconditionError("small_u_coefficient: s must be non-negative");
  switch (wavelet.kind) {
    case WaveletKind::Morlet:
      return morlet_coefficient(wavelet.center_frequency, s);
    case WaveletKind::MexicanHat:
      return mexican_hat_coefficient(s);
    case WaveletKind::Haar:
      return haar_coefficient(s);
  }
  return 0.0;
}

CoefficientTable small_u_coefficients(const WaveletSpec& wavelet, int n) {
  if (n < 1) throw PreconditionError("small_u_coefficients: n must be at least 1");
  CoefficientTable table;
  table.lambda = wavelet.lambda;
  table.n = n;
  table.coefficients.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) table.coefficients.push_back(small_u_coefficient(wavelet, s));
  return table;
}

CoefficientTable small_u_coefficients_numeric(const std::function<cplx(cplx)>& g, double lambda,
                                              int n, const NumericTaylorOptions& options) {
  if (n < 1) throw PreconditionError("small_u_coefficients_numeric: n must be at least 1");
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw PreconditionError("small_u_coefficients_numeric: lambda must lie in (0, 1]");
  }
  if (!(options.radius > 0.0) || options.samples < 2 * n + 8) {
    throw PreconditionError("small_u_coefficients_numeric: radius > 0 and samples >= 2n + 8");
  }
  const int m = options.samples;
  auto contour = [&](double r) {
    std::vector<cplx> c(static_cast<std::size_t>(n), cplx(0.0, 0.0));
    for (int k = 0; k < m; ++k) {
      const double theta = 2.0 * kPi * (k + 0.5) / m;
      const cplx u = std::polar(r, theta);
      cplx value = g(u);
      if (lambda != 1.0) value *= std::pow(u, 1.0 - lambda);
      for (int s = 0; s < n; ++s) {
        c[static_cast<std::size_t>(s)] += value * std::polar(1.0, -s * theta);
      }
    }
    for (int s = 0; s < n; ++s) {
      c[static_cast<std::size_t>(s)] /= m * std::pow(r, s);
    }
    return c;
  };
  const std::vector<cplx> outer = contour(options.radius);
  const std::vector<cplx> inner = contour(0.5 * options.radius);

  CoefficientTable table;
  table.lambda = lambda;
  table.n = n;
  table.coefficients = outer;
  table.error_estimates.resize(static_cast<std::size_t>(n));
  double worst = 0.0;
  for (int s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    const double diff = std::abs(outer[i] - inner[i]);
    table.error_estimates[i] = diff;
    worst = std::max(worst, diff / std::max(1.0, std::abs(outer[i])));
  }
  if (!(worst <= options.tolerance)) {
    throw ConvergenceError("small_u_coefficients_numeric: contour estimates disagree", worst);
  }
  return table;
}

PsiHatTail::PsiHatTail(const WaveletSpec& wavelet, int n) : wavelet_(wavelet), n_(n) {
  if (n < 1) throw PreconditionError("psi_hat_tail: n must be at least 1");
  head_ = small_u_coefficients(wavelet, n).coefficients;
  series_ = series_coefficients(wavelet, n, kTailSeriesTerms);
}

cplx PsiHatTail::operator()(double u) const {
  // Radius inside which the tail series is summed instead of subtracting
  // nearly equal quantities.
  double radius = 1.0;
  if (wavelet_.kind == WaveletKind::MexicanHat) radius = 2.0;
  if (wavelet_.kind == WaveletKind::Haar) radius = 4.0;
  if (wavelet_.kind == WaveletKind::Morlet) {
    radius = std::min(1.0, 4.0 / std::max(1.0, wavelet_.center_frequency));
  }
  if (std::abs(u) <= radius) {
    cplx sum = 0.0;
    double power = std::pow(u, n_);
    for (const cplx& c : series_) {
      sum += c * power;
      power *= u;
    }
    return sum;
  }
  cplx partial = 0.0;
  double power = 1.0;
  for (const cplx& c : head_) {
    partial += c * power;
    power *= u;
  }
  return wavelet_.psi_hat_conj(u) - partial;
}

cplx psi_hat_tail(const WaveletSpec& wavelet, double u, int n) {
  return PsiHatTail(wavelet, n)(u);
}

}  // namespace cwtasym
