// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/signals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cwtasym/error.hpp"

namespace cwtasym {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTailTerms = 16;

void check_shape(double amplitude, double width) {
  if (!std::isfinite(amplitude)) throw PreconditionError("signal amplitude must be finite");
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw PreconditionError("signal width must be positive and finite");
  }
}

SignalSpec builtin(SignalKind kind, double amplitude, double width) {
  check_shape(amplitude, width);
  SignalSpec s;
  s.kind = kind;
  s.family = kind;
  s.amplitude = amplitude;
  s.width = width;
  s.rho = 0.0;
  if (kind == SignalKind::TwoSidedExp) {
    // 2 A w / (1 + w^2 u^2) = sum_k 2 A (-1)^k w^(-2k-1) u^(-2k-2)
    s.tail_beta = 2.0;
    s.tail_coeffs.assign(kTailTerms, 0.0);
    for (int r = 0; r < kTailTerms; r += 2) {
      const double sign = (r / 2) % 2 == 0 ? 1.0 : -1.0;
      s.tail_coeffs[static_cast<std::size_t>(r)] = 2.0 * amplitude * sign * std::pow(width, -r - 1);
    }
  } else {
    s.tail_beta = std::numeric_limits<double>::infinity();
  }
  return s;
}

}  // namespace

SignalSpec SignalSpec::lorentzian(double amplitude, double width) {
  return builtin(SignalKind::Lorentzian, amplitude, width);
}

SignalSpec SignalSpec::two_sided_exp(double amplitude, double width) {
  return builtin(SignalKind::TwoSidedExp, amplitude, width);
}

SignalSpec SignalSpec::gaussian(double amplitude, double width) {
  return builtin(SignalKind::Gaussian, amplitude, width);
}

SignalSpec SignalSpec::custom(SignalKind family, double amplitude, double width, double tail_beta,
                              std::vector<double> tail_coeffs, double rho) {
  if (family == SignalKind::Custom) throw PreconditionError("custom signal needs a closed-form family");
  check_shape(amplitude, width);
  if (!(tail_beta > 0.0)) throw PreconditionError("tail_beta must be positive");
  if (std::isinf(tail_beta) && !tail_coeffs.empty()) {
    throw PreconditionError("tail_coeffs must be empty when tail_beta is infinite");
  }
  if (std::isfinite(tail_beta) && tail_coeffs.empty()) {
    throw PreconditionError("a finite tail_beta needs at least one tail coefficient");
  }
  if (!std::isfinite(rho)) throw PreconditionError("rho must be finite");
  SignalSpec s;
  s.kind = SignalKind::Custom;
  s.family = family;
  s.amplitude = amplitude;
  s.width = width;
  s.tail_beta = tail_beta;
  s.tail_coeffs = std::move(tail_coeffs);
  s.rho = rho;
  return s;
}

double SignalSpec::f(double t) const {
  const double x = t / width;
  switch (family) {
    case SignalKind::Lorentzian:
      return amplitude / (1.0 + x * x);
    case SignalKind::TwoSidedExp:
      return amplitude * std::exp(-std::abs(x));
    case SignalKind::Gaussian:
      return amplitude * std::exp(-0.5 * x * x);
    case SignalKind::Custom:
      break;
  }
  return 0.0;
}

cplx SignalSpec::f_hat(double omega) const {
  const double x = width * omega;
  const double scale = amplitude * width;
  switch (family) {
    case SignalKind::Lorentzian:
      return scale * kPi * std::exp(-std::abs(x));
    case SignalKind::TwoSidedExp:
      return scale * 2.0 / (1.0 + x * x);
    case SignalKind::Gaussian:
      return scale * std::sqrt(2.0 * kPi) * std::exp(-0.5 * x * x);
    case SignalKind::Custom:
      break;
  }
  return 0.0;
}

double SignalSpec::f_hat_envelope(double u) const { return std::abs(f_hat(std::abs(u))); }

std::vector<double> SignalSpec::kinks() const {
  if (family == SignalKind::TwoSidedExp) return {0.0};
  return {};
}

bool SignalSpec::has_algebraic_tail() const { return std::isfinite(tail_beta); }

std::string SignalSpec::name() const {
  if (kind == SignalKind::Custom) return "custom(" + signal_kind_name(family) + ")";
  return signal_kind_name(kind);
}

SignalKind parse_signal_kind(const std::string& name) {
  if (name == "lorentzian") return SignalKind::Lorentzian;
  if (name == "twosidedexp" || name == "exp") return SignalKind::TwoSidedExp;
  if (name == "gaussian") return SignalKind::Gaussian;
  throw PreconditionError("unknown signal '" + name + "'");
}

std::string signal_kind_name(SignalKind kind) {
  switch (kind) {
    case SignalKind::Lorentzian:
      return "lorentzian";
    case SignalKind::TwoSidedExp:
      return "twosidedexp";
    case SignalKind::Gaussian:
      return "gaussian";
    case SignalKind::Custom:
      return "custom";
  }
  return "unknown";
}

cplx f_hat(const SignalSpec& signal, double omega) { return signal.f_hat(omega); }

cplx HSpec::operator()(double u) const {
  if (mirrored) return std::exp(cplx(0.0, -b * u)) * signal.f_hat(-u);
  return std::exp(cplx(0.0, b * u)) * signal.f_hat(u);
}

cplx h_eval(const HSpec& h, double u) { return h(u); }

CoefficientTable time_coefficients(const SignalSpec& signal, double b, int n) {
  if (n < 1) throw PreconditionError("time_coefficients: n must be at least 1");
  if (!std::isfinite(b)) throw PreconditionError("time_coefficients: b must be finite");
  CoefficientTable table;
  table.lambda = 1.0;
  table.n = n;
  table.coefficients.assign(static_cast<std::size_t>(n), cplx(0.0, 0.0));
  const double w = signal.width;
  const double a = signal.amplitude;
  auto& c = table.coefficients;
  switch (signal.family) {
    case SignalKind::Lorentzian:
      if (b == 0.0) {
        for (int s = 0; s < n; s += 2) {
          c[static_cast<std::size_t>(s)] = a * ((s / 2) % 2 == 0 ? 1.0 : -1.0) * std::pow(w, -s);
        }
      } else {
        // 1/(1+x^2) = Im 1/(x - i); expand 1/(x - i) about x0 = b/w.
        const cplx base = 1.0 / cplx(b, -w);
        cplx power = base;
        for (int s = 0; s < n; ++s) {
          const double sign = s % 2 == 0 ? 1.0 : -1.0;
          c[static_cast<std::size_t>(s)] = a * w * sign * power.imag();
          power *= base;
        }
      }
      break;
    case SignalKind::TwoSidedExp: {
      if (b == 0.0) {
        if (n == 1) {
          c[0] = a;
          break;
        }
        throw PreconditionError("time_coefficients: exp(-|t|) is not differentiable at b = 0");
      }
      const double rate = (b > 0.0 ? -1.0 : 1.0) / w;
      double term = a * std::exp(-std::abs(b) / w);
      for (int s = 0; s < n; ++s) {
        c[static_cast<std::size_t>(s)] = term;
        term *= rate / (s + 1);
      }
      break;
    }
    case SignalKind::Gaussian: {
      // exp(-(x0+h)^2/2) = exp(-x0^2/2) sum_s He_s(-x0) h^s / s!
      const double x0 = b / w;
      const double pre = a * std::exp(-0.5 * x0 * x0);
      double cur = 1.0;
      double before = 0.0;
      double wpow = 1.0;
      for (int s = 0; s < n; ++s) {
        c[static_cast<std::size_t>(s)] = pre * cur / wpow;
        const double next = (-x0 * cur - before) / (s + 1);
        before = cur;
        cur = next;
        wpow *= w;
      }
      break;
    }
    case SignalKind::Custom:
      throw PreconditionError("time_coefficients: unsupported signal family");
  }
  return table;
}

}  // namespace cwtasym
