// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cwtasym/error.hpp"

namespace cwtasym {

namespace {

constexpr double kPi = std::numbers::pi;

// Noise amplification bound of Richardson extrapolation on a halving grid.
constexpr double kExtrapolationGain = 10.0;

cplx upow(double u, cplx w) { return std::exp(w * std::log(u)); }

double endpoint_exponent(cplx z, double rho) {
  const double sigma = z.real() - 1.0 + rho;
  return sigma < 0.0 ? sigma : 0.0;
}

void check_integrable_at_zero(cplx z, double rho) {
  if (!(z.real() + rho > 0.0)) {
    throw PreconditionError("mellin: Re z + rho must be positive for integrability at u = 0");
  }
}

double period_of(double rate) { return rate != 0.0 ? 2.0 * kPi / std::abs(rate) : 0.0; }

ComplexFn weighted(const HSpec& h, cplx z, double eps) {
  return [h, z, eps](double u) -> cplx {
    cplx v = upow(u, z - 1.0) * h(u);
    if (eps != 0.0) v *= std::exp(-eps * u);
    return v;
  };
}

RealFn weighted_envelope(const SignalSpec& signal, cplx z, double eps) {
  return [signal, z, eps](double u) {
    double v = std::pow(u, z.real() - 1.0) * signal.f_hat_envelope(u);
    if (eps != 0.0) v *= std::exp(-eps * u);
    return v;
  };
}

IntegrandHints hints_for(const HSpec& h, cplx z) {
  IntegrandHints hints;
  hints.endpoint_exponent = endpoint_exponent(z, h.signal.rho);
  hints.period = period_of(h.phase_rate());
  hints.scale = 1.0 / h.signal.width;
  return hints;
}

MellinValue from_quadrature(cplx z, const QuadratureResult& r, MellinMethod method) {
  if (!r.converged) {
    throw ConvergenceError("mellin: quadrature did not converge", r.abs_error_estimate);
  }
  return {z, r.value, method, r.abs_error_estimate};
}

MellinValue pure_quadrature(const HSpec& h, cplx z, const QuadratureConfig& cfg) {
  const SignalSpec& sig = h.signal;
  if (sig.has_algebraic_tail() && !(z.real() < sig.tail_beta)) {
    throw PreconditionError(
        "mellin: plain quadrature needs Re z < tail_beta; use a regularized method with b != 0");
  }
  IntegrandHints hints = hints_for(h, z);
  hints.envelope = weighted_envelope(sig, z, 0.0);
  return from_quadrature(z, integrate(weighted(h, z, 0.0), 0.0, kInf, cfg, hints),
                         MellinMethod::PureQuadrature);
}

MellinValue closed_form(const HSpec& h, cplx z) {
  const SignalSpec& sig = h.signal;
  if (sig.family != SignalKind::Lorentzian) {
    throw PreconditionError("mellin: closed form is available for the Lorentzian family only");
  }
  // integral u^(z-1) A w pi exp(-(w - i rate) u) du = A w pi Gamma(z) (w - i rate)^(-z)
  const SpecFunResult g = gamma_complex(z);
  const cplx base(sig.width, -h.phase_rate());
  const cplx scale = sig.amplitude * sig.width * kPi * std::exp(-z * std::log(base));
  const cplx value = scale * g.value;
  return {z, value, MellinMethod::ClosedForm,
          std::abs(scale) * g.abs_error_estimate + 4.0 * 2.2e-16 * std::abs(value)};
}

MellinValue split_tail(const HSpec& h, cplx z, const QuadratureConfig& cfg) {
  const SignalSpec& sig = h.signal;
  if (!sig.has_algebraic_tail()) return pure_quadrature(h, z, cfg);
  const double rate = h.phase_rate();
  if (rate == 0.0) {
    throw PreconditionError("mellin: the split-tail method needs b != 0");
  }
  double split = std::max({10.0, 2.0 * std::abs(z), 10.0 / sig.width, 8.0 / std::abs(rate)});
  IntegrandHints hints = hints_for(h, z);
  const ComplexFn f = weighted(h, z, 0.0);
  double last_residual = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt, split *= 2.0) {
    const QuadratureResult head = integrate(f, 0.0, split, cfg, hints);
    if (!head.converged) {
      throw ConvergenceError("mellin: head quadrature did not converge", head.abs_error_estimate);
    }
    cplx tail = 0.0;
    double tail_error = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    double omitted = 0.0;
    for (std::size_t r = 0; r < sig.tail_coeffs.size(); ++r) {
      const double br = sig.tail_coeffs[r];
      if (br == 0.0) continue;
      const cplx w = z - static_cast<double>(r) - sig.tail_beta;
      const SpecFunResult t = mellin_tail_analytic(w, rate, split);
      const cplx term = br * t.value;
      if (std::abs(term) > previous) {
        omitted = previous;
        break;
      }
      tail += term;
      tail_error += std::abs(br) * t.abs_error_estimate;
      previous = std::abs(term);
      omitted = previous;
    }
    const cplx value = head.value + tail;
    last_residual = omitted;
    if (omitted <= 1e-12 * std::abs(value)) {
      return {z, value, MellinMethod::SplitTailAnalytic,
              head.abs_error_estimate + tail_error + omitted};
    }
  }
  throw ConvergenceError("mellin: analytic tail did not reach tolerance", last_residual);
}

MellinValue eps_extrapolation(const HSpec& h, cplx z, const QuadratureConfig& cfg) {
  const SignalSpec& sig = h.signal;
  if (sig.has_algebraic_tail() && h.phase_rate() == 0.0 && !(z.real() < sig.tail_beta)) {
    throw PreconditionError("mellin: the regularized integral has no eps expansion when b = 0");
  }
  const IntegrandHints base = hints_for(h, z);
  const auto regularized = [&](double eps) {
    IntegrandHints hints = base;
    hints.envelope = weighted_envelope(sig, z, eps);
    return integrate(weighted(h, z, eps), 0.0, kInf, cfg, hints);
  };
  const QuadratureResult r = abel_limit(regularized, cfg);
  return {z, r.value, MellinMethod::EpsExtrapolation, r.abs_error_estimate};
}

}  // namespace

const char* mellin_method_name(MellinMethod method) {
  switch (method) {
    case MellinMethod::Auto:
      return "auto";
    case MellinMethod::SplitTailAnalytic:
      return "tail";
    case MellinMethod::EpsExtrapolation:
      return "eps";
    case MellinMethod::ClosedForm:
      return "closed";
    case MellinMethod::PureQuadrature:
      return "quad";
  }
  return "unknown";
}

SpecFunResult mellin_tail_analytic(cplx w, double rate, double split) {
  if (rate == 0.0 || !(split > 0.0)) {
    throw PreconditionError("mellin_tail_analytic: needs rate != 0 and split > 0");
  }
  const cplx q(0.0, -rate);
  const cplx scale = std::exp(-w * std::log(q));
  const SpecFunResult g = upper_incomplete_gamma(w, q * split);
  return {scale * g.value, std::abs(scale) * g.abs_error_estimate, g.method};
}

QuadratureResult abel_limit(const std::function<QuadratureResult(double)>& regularized,
                            const QuadratureConfig& config) {
  config.validate();
  const int levels = config.eps_levels;
  std::vector<std::vector<cplx>> table(static_cast<std::size_t>(levels));
  QuadratureResult out;
  out.converged = true;
  double noise = 0.0;
  double previous_correction = std::numeric_limits<double>::infinity();
  double correction = 0.0;
  double eps = config.eps0;
  for (int k = 0; k < levels; ++k, eps *= 0.5) {
    const QuadratureResult r = regularized(eps);
    if (!r.converged) {
      throw ConvergenceError("abel_limit: regularized integral did not converge",
                             r.abs_error_estimate);
    }
    out.evaluations += r.evaluations;
    noise = std::max(noise, r.abs_error_estimate);
    auto& row = table[static_cast<std::size_t>(k)];
    row.push_back(r.value);
    for (int j = 1; j <= k; ++j) {
      const cplx prev = table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
      const cplx cur = row[static_cast<std::size_t>(j - 1)];
      row.push_back(cur + (cur - prev) / (std::ldexp(1.0, j) - 1.0));
    }
    if (k == 0) continue;
    const cplx diag = row.back();
    const cplx last = table[static_cast<std::size_t>(k - 1)].back();
    correction = std::abs(diag - last);
    if (k >= 2 && correction > previous_correction &&
        correction > kExtrapolationGain * noise) {
      throw ConvergenceError("abel_limit: extrapolation corrections grow", correction);
    }
    previous_correction = correction;
  }
  out.value = table.back().back();
  out.abs_error_estimate = (levels > 1 ? correction : noise) + kExtrapolationGain * noise;
  return out;
}

MellinValue mellin_transform(const HSpec& h, cplx z, MellinMethod method,
                             const QuadratureConfig& config) {
  config.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw PreconditionError("mellin: z must be finite");
  }
  check_integrable_at_zero(z, h.signal.rho);
  switch (method) {
    case MellinMethod::Auto:
      if (!h.signal.has_algebraic_tail()) return pure_quadrature(h, z, config);
      if (h.phase_rate() != 0.0) return split_tail(h, z, config);
      return pure_quadrature(h, z, config);
    case MellinMethod::SplitTailAnalytic:
      if (!h.signal.has_algebraic_tail()) {
        MellinValue v = pure_quadrature(h, z, config);
        v.method = MellinMethod::SplitTailAnalytic;
        return v;
      }
      return split_tail(h, z, config);
    case MellinMethod::EpsExtrapolation:
      return eps_extrapolation(h, z, config);
    case MellinMethod::ClosedForm:
      return closed_form(h, z);
    case MellinMethod::PureQuadrature:
      if (h.signal.has_algebraic_tail() && h.phase_rate() != 0.0) {
        throw PreconditionError(
            "mellin: plain quadrature does not apply to an oscillatory algebraic tail; use the "
            "split-tail or eps-extrapolation method");
      }
      return pure_quadrature(h, z, config);
  }
  throw PreconditionError("mellin: unknown method");
}

MellinValue mellin_quadrature(const ComplexFn& h, cplx z, const RealFn& envelope,
                              const QuadratureConfig& config, double rho, double period) {
  check_integrable_at_zero(z, rho);
  IntegrandHints hints;
  hints.endpoint_exponent = endpoint_exponent(z, rho);
  hints.period = period;
  hints.envelope = [envelope, z](double u) { return std::pow(u, z.real() - 1.0) * envelope(u); };
  const ComplexFn f = [&h, z](double u) { return upow(u, z - 1.0) * h(u); };
  return from_quadrature(z, integrate(f, 0.0, kInf, config, hints), MellinMethod::PureQuadrature);
}

MellinValue mellin_morlet_time(cplx nu, double omega0, MorletSign sign) {
  if (!(nu.real() > 0.0)) throw PreconditionError("mellin_morlet_time: Re nu must be positive");
  if (!std::isfinite(omega0)) throw PreconditionError("mellin_morlet_time: omega0 must be finite");
  const SpecFunResult g = gamma_complex(nu);
  const cplx arg(0.0, sign == MorletSign::Plus ? -omega0 : omega0);
  const SpecFunResult d = parabolic_cylinder_D(-nu, arg);
  const double damp = std::exp(-0.25 * omega0 * omega0);
  const cplx value = g.value * damp * d.value;
  const double err = damp * (std::abs(g.value) * d.abs_error_estimate +
                             g.abs_error_estimate * std::abs(d.value));
  return {nu, value, MellinMethod::ClosedForm, err};
}

}  // namespace cwtasym
