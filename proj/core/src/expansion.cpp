// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwtasym/error.hpp"
#include "cwtasym/oracle.hpp"
#include "tails.hpp"

namespace cwtasym {

namespace {

constexpr double kPi = std::numbers::pi;

// e^{i pi x} on the principal branch; exact signs for integer x.
cplx unit_phase(double x) {
  if (x == std::floor(x)) return std::fmod(std::abs(x), 2.0) == 0.0 ? 1.0 : -1.0;
  return std::polar(1.0, kPi * x);
}

void check_order(int n) {
  if (n < 1) throw PreconditionError("expansion: n must be at least 1");
}

void check_point(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("expansion: a must be positive");
  if (!std::isfinite(b)) throw PreconditionError("expansion: b must be finite");
}

ExpansionResult assemble(const ExpansionSeries& series, double a, double b) {
  ExpansionResult out;
  out.terms = series.terms(a);
  for (std::size_t s = 0; s < out.terms.size(); ++s) {
    out.partial_sum += out.terms[s];
    out.partial_sum_error += series.factor_errors[s] * std::pow(a, series.exponents[s]);
  }
  out.remainder_prefactor = series.remainder_prefactor;
  out.a = a;
  out.b = b;
  out.n = series.n;
  out.lambda = series.lambda;
  out.warnings = series.warnings;
  return out;
}

void attach(ExpansionResult& out, const QuadratureResult& r, RemainderKind kind) {
  out.remainder_estimate = r.value;
  out.remainder_error = r.abs_error_estimate;
  out.remainder_kind = kind;
  if (!r.converged) out.warnings.push_back("remainder quadrature did not reach tolerance");
}

void attach_empirical(ExpansionResult& out, const QuadratureResult& oracle) {
  QuadratureResult r;
  r.value = (oracle.value - out.partial_sum) / out.remainder_prefactor;
  r.abs_error_estimate =
      (oracle.abs_error_estimate + out.partial_sum_error) / out.remainder_prefactor;
  r.converged = oracle.converged;
  attach(out, r, RemainderKind::Empirical);
}

// Moment integral_0^inf t^(nu-1) conj psi(dir t) dt for Gaussian-type wavelets.
MellinValue wavelet_moment(const WaveletSpec& wavelet, double nu, double dir,
                           const QuadratureConfig& config) {
  if (wavelet.kind == WaveletKind::MexicanHat) {
    // Even wavelet: 2^(nu/2 - 1) Gamma(nu/2) (1 - nu) on both half-lines.
    const SpecFunResult g = gamma_complex(nu / 2.0);
    const double scale = std::pow(2.0, nu / 2.0 - 1.0) * (1.0 - nu);
    return {nu, scale * g.value, MellinMethod::ClosedForm, std::abs(scale) * g.abs_error_estimate};
  }
  const ComplexFn f = [&wavelet, dir](double t) { return std::conj(wavelet.psi(dir * t)); };
  const RealFn env = [&wavelet](double t) { return wavelet.psi_envelope(t); };
  const double period =
      wavelet.kind == WaveletKind::Morlet ? 2.0 * kPi / wavelet.center_frequency : 0.0;
  return mellin_quadrature(f, nu, env, config, 0.0, period);
}

}  // namespace

const char* remainder_kind_name(RemainderKind kind) {
  switch (kind) {
    case RemainderKind::IntegralM0:
      return "integral_m0";
    case RemainderKind::Empirical:
      return "empirical";
    case RemainderKind::None:
      return "none";
  }
  return "unknown";
}

std::vector<cplx> ExpansionSeries::terms(double a) const {
  std::vector<cplx> out(factors.size());
  for (std::size_t s = 0; s < factors.size(); ++s) {
    out[s] = factors[s] == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : factors[s] * std::pow(a, exponents[s]);
  }
  return out;
}

double ExpansionResult::scaled_remainder() const {
  return remainder_estimate ? std::abs(remainder_prefactor * *remainder_estimate) : 0.0;
}

ExpansionSeries frequency_series(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                 int n, const QuadratureConfig& config,
                                 const ExpansionOptions& options) {
  check_order(n);
  if (!std::isfinite(b)) throw PreconditionError("expansion: b must be finite");
  const CoefficientTable table = small_u_coefficients(wavelet, n);
  const double lambda = wavelet.lambda;

  ExpansionSeries series;
  series.lambda = lambda;
  series.n = n;
  series.remainder_prefactor = 1.0 / (2.0 * kPi);
  if (signal.rho + lambda <= 0.0) {
    series.warnings.push_back("rho + lambda <= 0: small-u integrability hypothesis fails");
  }
  if (wavelet.kind == WaveletKind::Haar) {
    series.warnings.push_back(
        "haar: psi_hat decays like 1/u, weaker than the decay hypothesis of the expansion");
  }
  if (signal.has_algebraic_tail() && b == 0.0) {
    series.warnings.push_back("b = 0 with an algebraic tail: moments exist only for s + lambda < beta");
  }

  const HSpec h{signal, b, false};
  const HSpec hm = h.mirror();
  for (int s = 0; s < n; ++s) {
    const cplx c = table.coefficients[static_cast<std::size_t>(s)];
    const double z = s + lambda;
    series.exponents.push_back(z - 0.5);
    if (c == cplx(0.0, 0.0)) {
      series.factors.emplace_back(0.0, 0.0);
      series.factor_errors.push_back(0.0);
      continue;
    }
    const MellinValue m1 = mellin_transform(h, z, options.mellin_method, config);
    const MellinValue m2 = mellin_transform(hm, z, options.mellin_method, config);
    cplx sign = unit_phase(z + 1.0);
    if (options.negate_mirrored_branch) sign = -sign;
    series.factors.push_back(c * (m1.value + sign * m2.value) / (2.0 * kPi));
    series.factor_errors.push_back(std::abs(c) * (m1.abs_error_estimate + m2.abs_error_estimate) /
                                   (2.0 * kPi));
  }
  return series;
}

ExpansionResult expand_frequency(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                 double a, int n, const QuadratureConfig& config,
                                 const ExpansionOptions& options) {
  check_point(a, b);
  ExpansionResult out = assemble(frequency_series(signal, wavelet, b, n, config, options), a, b);
  if (options.integral_remainder) {
    attach(out, remainder_frequency(signal, wavelet, b, a, n, config), RemainderKind::IntegralM0);
  } else if (options.empirical_remainder) {
    attach_empirical(out, cwt_fourier(signal, wavelet, b, a, config));
  }
  return out;
}

QuadratureResult remainder_frequency(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                     double a, int n, const QuadratureConfig& config) {
  check_order(n);
  check_point(a, b);
  config.validate();
  const PsiHatTail tail(wavelet, n);
  std::vector<double> head_abs;
  for (const cplx& c : tail.head()) head_abs.push_back(std::abs(c));
  const bool regularize = signal.has_algebraic_tail();
  if (regularize && b == 0.0 && !(n + wavelet.lambda - 1.0 < signal.tail_beta - 1.0)) {
    throw PreconditionError(
        "remainder_frequency: with b = 0 the remainder integral diverges for this n");
  }

  double period = b != 0.0 ? 2.0 * kPi * a / std::abs(b) : 0.0;
  const double wp = wavelet.fourier_period();
  if (wp > 0.0) period = period > 0.0 ? std::min(period, wp) : wp;

  const auto phase = [&](double u) { return std::exp(cplx(0.0, b * u / a)); };
  IntegrandHints hints;
  hints.period = period;
  hints.scale = std::min(a / signal.width, 1.0);
  if (wavelet.kind == WaveletKind::Morlet) hints.breakpoints.push_back(wavelet.center_frequency);

  QuadratureResult r;
  if (regularize && b != 0.0) {
    // Split at U. Below U integrate psi_hat_n directly; above U, psi_hat_n = psi_hat - sum c_s u^s
    // where the psi_hat part converges absolutely and the polynomial part is Abel-regularized
    // in closed form from the tail metadata of f_hat.
    const double split = std::max(64.0, 64.0 * a / signal.width);
    const ComplexFn head_fn = [&](double u) {
      const cplx p = phase(u);
      return tail(u) * p * signal.f_hat(u / a) + tail(-u) * std::conj(p) * signal.f_hat(-u / a);
    };
    r = integrate(head_fn, 0.0, split, config, hints);
    if (wavelet.kind == WaveletKind::Haar) {
      r = combine(r, detail::haar_algebraic_tail(signal, b, a, split));
    } else {
      const ComplexFn full = [&](double u) {
        const cplx p = phase(u);
        return wavelet.psi_hat_conj(u) * p * signal.f_hat(u / a) +
               wavelet.psi_hat_conj(-u) * std::conj(p) * signal.f_hat(-u / a);
      };
      IntegrandHints far = hints;
      far.envelope = [&](double u) {
        return 2.0 * wavelet.psi_hat_envelope(u) * signal.f_hat_envelope(u / a);
      };
      r = combine(r, integrate(full, split, kInf, config, far));
    }
    for (int s = 0; s < n; ++s) {
      const cplx c = tail.head()[static_cast<std::size_t>(s)];
      if (c == cplx(0.0, 0.0)) continue;
      const int m = s + static_cast<int>(wavelet.lambda) - 1;
      QuadratureResult poly = detail::polynomial_tail(signal, m, b, a, split);
      poly.value *= -c;
      poly.abs_error_estimate *= std::abs(c);
      r = combine(r, poly);
    }
  } else {
    const ComplexFn f = [&](double u) {
      const cplx p = phase(u);
      return tail(u) * p * signal.f_hat(u / a) + tail(-u) * std::conj(p) * signal.f_hat(-u / a);
    };
    hints.envelope = [&](double u) {
      double poly = 0.0;
      double power = 1.0;
      for (double c : head_abs) {
        poly += c * power;
        power *= u;
      }
      return 2.0 * (wavelet.psi_hat_envelope(u) + poly) * signal.f_hat_envelope(u / a);
    };
    r = integrate(f, 0.0, kInf, config, hints);
  }
  const double scale = 1.0 / std::sqrt(a);
  r.value *= scale;
  r.abs_error_estimate *= scale;
  return r;
}

ExpansionSeries time_series(const SignalSpec& signal, const WaveletSpec& wavelet, double b, int n,
                            const QuadratureConfig& config) {
  check_order(n);
  const CoefficientTable d = time_coefficients(signal, b, n);
  ExpansionSeries series;
  series.lambda = d.lambda;
  series.n = n;
  series.remainder_prefactor = 1.0;
  for (int s = 0; s < n; ++s) {
    const cplx c = d.coefficients[static_cast<std::size_t>(s)];
    const double nu = s + d.lambda;
    series.exponents.push_back(nu - 0.5);
    if (c == cplx(0.0, 0.0)) {
      series.factors.emplace_back(0.0, 0.0);
      series.factor_errors.push_back(0.0);
      continue;
    }
    cplx plus;
    cplx minus;
    double err = 0.0;
    if (wavelet.kind == WaveletKind::Haar) {
      // integral_0^{1/2} t^(nu-1) dt - integral_{1/2}^1 t^(nu-1) dt; psi(-t) = 0 for t > 0.
      plus = (2.0 * std::pow(0.5, nu) - 1.0) / nu;
      minus = 0.0;
      err = 4.0 * 2.2e-16;
    } else {
      const MellinValue mp = wavelet_moment(wavelet, nu, 1.0, config);
      const MellinValue mm = wavelet_moment(wavelet, nu, -1.0, config);
      plus = mp.value;
      minus = mm.value;
      err = mp.abs_error_estimate + mm.abs_error_estimate;
    }
    series.factors.push_back(c * (plus + unit_phase(nu - 1.0) * minus));
    series.factor_errors.push_back(std::abs(c) * err);
  }
  return series;
}

ExpansionResult expand_time(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                            double a, int n, const QuadratureConfig& config,
                            const ExpansionOptions& options) {
  check_point(a, b);
  ExpansionResult out = assemble(time_series(signal, wavelet, b, n, config), a, b);
  if (options.integral_remainder) {
    attach(out, remainder_time(signal, wavelet, b, a, n, config), RemainderKind::IntegralM0);
  } else if (options.empirical_remainder) {
    attach_empirical(out, cwt_time(signal, wavelet, b, a, config));
  }
  return out;
}

QuadratureResult remainder_time(const SignalSpec& signal, const WaveletSpec& wavelet, double b,
                                double a, int n, const QuadratureConfig& config) {
  check_order(n);
  check_point(a, b);
  config.validate();
  const CoefficientTable d = time_coefficients(signal, b, n);
  const auto g_n = [&](double t) {
    cplx poly = 0.0;
    double power = 1.0;
    for (const cplx& c : d.coefficients) {
      poly += c * power;
      power *= t;
    }
    return signal.f(b + t) - poly;
  };
  std::vector<double> kinks;
  for (double t : signal.kinks()) kinks.push_back(std::abs(t - b) / a);

  QuadratureResult r;
  if (wavelet.kind == WaveletKind::Haar) {
    const ComplexFn f = [&](double s) { return g_n(a * s) * std::conj(wavelet.psi(s)); };
    IntegrandHints hints;
    hints.breakpoints.push_back(0.5);
    for (double k : kinks) {
      if (k > 0.0 && k < 1.0) hints.breakpoints.push_back(k);
    }
    r = integrate(f, 0.0, 1.0, config, hints);
  } else {
    const ComplexFn f = [&](double s) {
      return g_n(a * s) * std::conj(wavelet.psi(s)) + g_n(-a * s) * std::conj(wavelet.psi(-s));
    };
    std::vector<double> abs_coeffs;
    for (const cplx& c : d.coefficients) abs_coeffs.push_back(std::abs(c));
    const double amplitude = std::abs(signal.amplitude);
    IntegrandHints hints;
    for (double k : kinks) {
      if (k > 0.0) hints.breakpoints.push_back(k);
    }
    if (wavelet.kind == WaveletKind::Morlet) hints.period = 2.0 * kPi / wavelet.center_frequency;
    hints.scale = 1.0;
    hints.envelope = [&, amplitude](double s) {
      double poly = amplitude;
      double power = 1.0;
      for (double c : abs_coeffs) {
        poly += c * power;
        power *= a * s;
      }
      return 2.0 * poly * wavelet.psi_envelope(s);
    };
    r = integrate(f, 0.0, kInf, config, hints);
  }
  const double scale = std::sqrt(a);
  r.value *= scale;
  r.abs_error_estimate *= scale;
  return r;
}

ExpansionSeries morlet_time_series(const SignalSpec& signal, double b, int n, double omega0) {
  check_order(n);
  const CoefficientTable d = time_coefficients(signal, b, n);
  ExpansionSeries series;
  series.lambda = d.lambda;
  series.n = n;
  series.remainder_prefactor = 1.0;
  for (int s = 0; s < n; ++s) {
    const cplx c = d.coefficients[static_cast<std::size_t>(s)];
    const double nu = s + d.lambda;
    series.exponents.push_back(nu - 0.5);
    if (c == cplx(0.0, 0.0)) {
      series.factors.emplace_back(0.0, 0.0);
      series.factor_errors.push_back(0.0);
      continue;
    }
    // conj psi(t) = exp(-i omega0 t - t^2/2) on t > 0 gives the Minus moment,
    // conj psi(-t) gives the Plus moment.
    const MellinValue right = mellin_morlet_time(nu, omega0, MorletSign::Minus);
    const MellinValue left = mellin_morlet_time(nu, omega0, MorletSign::Plus);
    series.factors.push_back(c * (right.value + unit_phase(nu - 1.0) * left.value));
    series.factor_errors.push_back(std::abs(c) *
                                   (right.abs_error_estimate + left.abs_error_estimate));
  }
  return series;
}

ExpansionResult expand_morlet_time(const SignalSpec& signal, double b, double a, int n,
                                   double omega0, const QuadratureConfig& config,
                                   const ExpansionOptions& options) {
  check_point(a, b);
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) {
    throw PreconditionError("expand_morlet_time: omega0 must be non-negative and finite");
  }
  ExpansionResult out = assemble(morlet_time_series(signal, b, n, omega0), a, b);
  const WaveletSpec wavelet{WaveletKind::Morlet, omega0, 1.0};
  if (options.integral_remainder) {
    attach(out, remainder_time(signal, wavelet, b, a, n, config), RemainderKind::IntegralM0);
  } else if (options.empirical_remainder) {
    attach_empirical(out, cwt_time(signal, wavelet, b, a, config));
  }
  return out;
}

double convergence_order(const std::vector<double>& a_grid, const std::vector<double>& errors) {
  if (a_grid.size() != errors.size() || a_grid.size() < 4) {
    throw PreconditionError("convergence_order: need at least four (a, error) pairs");
  }
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (!(a_grid[i] > 0.0) || !(errors[i] > 0.0) || !std::isfinite(errors[i])) {
      throw PreconditionError("convergence_order: a and errors must be positive");
    }
    x.push_back(std::log(a_grid[i]));
    y.push_back(std::log(errors[i]));
  }
  std::vector<double> sorted = a_grid;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("convergence_order: a values must be distinct");
  }
  const double count = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace cwtasym
