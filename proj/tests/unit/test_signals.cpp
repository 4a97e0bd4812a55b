// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cwtasym/error.hpp"
#include "cwtasym/quadrature.hpp"
#include "cwtasym/signals.hpp"

namespace cwtasym {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<SignalSpec> builtins() {
  return {SignalSpec::lorentzian(), SignalSpec::two_sided_exp(), SignalSpec::gaussian(),
          SignalSpec::lorentzian(2.0, 0.5), SignalSpec::gaussian(0.5, 3.0)};
}

QuadratureResult fourier_quadrature(const SignalSpec& s, double omega) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-15;
  IntegrandHints hints;
  hints.envelope = [&](double t) { return std::abs(s.f(t)); };
  if (omega != 0.0) hints.period = 2.0 * kPi / std::abs(omega);
  // f is even for every built-in, so the transform is 2 * integral_0^inf f(t) cos(omega t) dt.
  auto r = integrate_real([&](double t) { return 2.0 * s.f(t) * std::cos(omega * t); }, 0.0, kInf,
                          cfg, hints);
  return r;
}

TEST(FHat, SpotValues) {
  EXPECT_NEAR(f_hat(SignalSpec::lorentzian(), 0.0).real(), kPi, 1e-15);
  EXPECT_NEAR(f_hat(SignalSpec::two_sided_exp(), 0.0).real(), 2.0, 1e-15);
  EXPECT_NEAR(f_hat(SignalSpec::gaussian(), 0.0).real(), std::sqrt(2.0 * kPi), 1e-15);
}

TEST(FHat, QuadratureOfZeroFrequency) {
  EXPECT_NEAR(fourier_quadrature(SignalSpec::lorentzian(), 0.0).value.real(), kPi, 1e-9);
  EXPECT_NEAR(fourier_quadrature(SignalSpec::two_sided_exp(), 0.0).value.real(), 2.0, 1e-10);
}

TEST(FHat, FourierConsistency) {
  for (const auto& s : builtins()) {
    for (const double omega : {0.0, 0.5, 1.0, 5.0}) {
      const cplx closed = s.f_hat(omega);
      const cplx quad = fourier_quadrature(s, omega).value;
      EXPECT_LE(std::abs(closed - quad), 1e-8 * (1.0 + std::abs(closed)))
          << s.name() << " omega=" << omega;
    }
  }
}

TEST(FHat, EnvelopeBoundsTransform) {
  for (const auto& s : builtins()) {
    for (double u = 0.0; u < 40.0; u += 0.25) {
      EXPECT_LE(std::abs(s.f_hat(u)), s.f_hat_envelope(u) * (1.0 + 1e-15));
      EXPECT_LE(std::abs(s.f_hat(-u)), s.f_hat_envelope(u) * (1.0 + 1e-15));
    }
  }
}

TEST(FHat, TwoSidedExpTailMetadata) {
  const auto s = SignalSpec::two_sided_exp();
  EXPECT_TRUE(s.has_algebraic_tail());
  EXPECT_EQ(s.tail_beta, 2.0);
  ASSERT_GE(s.tail_coeffs.size(), 5u);
  const std::vector<double> head = {2.0, 0.0, -2.0, 0.0, 2.0};
  for (std::size_t r = 0; r < head.size(); ++r) EXPECT_EQ(s.tail_coeffs[r], head[r]);
  for (const double w : {10.0, 30.0, 100.0}) {
    double series = 0.0;
    for (std::size_t r = 0; r < s.tail_coeffs.size(); ++r) {
      series += s.tail_coeffs[r] * std::pow(w, -static_cast<double>(r) - s.tail_beta);
    }
    EXPECT_NEAR(s.f_hat(w).real(), series, 1e-12 * series);
  }
}

TEST(FHat, SuperAlgebraicSignalsHaveNoTail) {
  EXPECT_FALSE(SignalSpec::lorentzian().has_algebraic_tail());
  EXPECT_FALSE(SignalSpec::gaussian().has_algebraic_tail());
  EXPECT_TRUE(std::isinf(SignalSpec::gaussian().tail_beta));
}

TEST(FHat, WidthAndAmplitudeScaling) {
  const auto s = SignalSpec::lorentzian(3.0, 2.0);
  EXPECT_NEAR(s.f(2.0), 3.0 / 2.0, 1e-15);
  EXPECT_NEAR(s.f_hat(0.5).real(), 3.0 * 2.0 * kPi * std::exp(-1.0), 1e-14);
}

TEST(HEval, SpotValues) {
  EXPECT_LT(std::abs(h_eval({SignalSpec::lorentzian(), 0.0, false}, 1.0) - kPi * std::exp(-1.0)),
            1e-15);
  for (const auto& s : builtins()) {
    EXPECT_EQ(h_eval({s, 1.7, false}, 0.0), s.f_hat(0.0));
    EXPECT_EQ(h_eval({s, 1.7, true}, 0.0), s.f_hat(0.0));
  }
  const cplx want = std::exp(cplx(0.0, 2.0)) * 0.4;
  EXPECT_LT(std::abs(h_eval({SignalSpec::two_sided_exp(), 1.0, false}, 2.0) - want), 1e-15);
}

TEST(HEval, MirrorReflectsArgument) {
  const HSpec h{SignalSpec::gaussian(), 0.8, false};
  const HSpec m = h.mirror();
  EXPECT_EQ(m.phase_rate(), -0.8);
  for (double u = -3.0; u <= 3.0; u += 0.5) {
    const cplx direct = std::exp(cplx(0.0, 0.8 * -u)) * h.signal.f_hat(-u);
    EXPECT_LT(std::abs(m(u) - direct), 1e-15);
    EXPECT_LT(std::abs(m(u) - h(-u)), 1e-15);
  }
}

TEST(TimeCoefficients, Lorentzian) {
  const auto t = time_coefficients(SignalSpec::lorentzian(), 0.0, 5);
  const std::vector<double> want = {1.0, 0.0, -1.0, 0.0, 1.0};
  for (std::size_t s = 0; s < 5; ++s) EXPECT_NEAR(t.coefficients[s].real(), want[s], 1e-15);
  EXPECT_EQ(t.lambda, 1.0);
}

TEST(TimeCoefficients, Gaussian) {
  const auto t = time_coefficients(SignalSpec::gaussian(), 0.0, 3);
  EXPECT_NEAR(t.coefficients[0].real(), 1.0, 1e-15);
  EXPECT_NEAR(t.coefficients[1].real(), 0.0, 1e-15);
  EXPECT_NEAR(t.coefficients[2].real(), -0.5, 1e-15);
}

TEST(TimeCoefficients, ZerothIsValue) {
  for (const auto& s : builtins()) {
    for (const double b : {-1.3, 0.4, 2.0}) {
      EXPECT_NEAR(time_coefficients(s, b, 1).coefficients[0].real(), s.f(b), 1e-15);
    }
  }
}

TEST(TimeCoefficients, MatchFiniteDifferencesAwayFromOrigin) {
  for (const auto& s : builtins()) {
    const double b = 0.7;
    const auto t = time_coefficients(s, b, 3);
    const double h = 1e-4;
    const double d1 = (s.f(b + h) - s.f(b - h)) / (2.0 * h);
    const double d2 = (s.f(b + h) - 2.0 * s.f(b) + s.f(b - h)) / (h * h);
    EXPECT_NEAR(t.coefficients[1].real(), d1, 1e-7) << s.name();
    EXPECT_NEAR(t.coefficients[2].real(), d2 / 2.0, 1e-5) << s.name();
  }
}

TEST(TimeCoefficients, KinkRejected) {
  EXPECT_THROW(time_coefficients(SignalSpec::two_sided_exp(), 0.0, 2), PreconditionError);
  EXPECT_NO_THROW(time_coefficients(SignalSpec::two_sided_exp(), 0.0, 1));
  EXPECT_THROW(time_coefficients(SignalSpec::gaussian(), 0.0, 0), PreconditionError);
}

TEST(SignalNames, RoundTrip) {
  for (const auto k : {SignalKind::Lorentzian, SignalKind::TwoSidedExp, SignalKind::Gaussian}) {
    EXPECT_EQ(parse_signal_kind(signal_kind_name(k)), k);
  }
  EXPECT_EQ(parse_signal_kind("exp"), SignalKind::TwoSidedExp);
  EXPECT_THROW(parse_signal_kind("sinc"), PreconditionError);
}

TEST(CustomSignal, CarriesMetadata) {
  const auto s = SignalSpec::custom(SignalKind::TwoSidedExp, 2.0, 1.0, 2.0, {4.0, 0.0, -4.0}, 0.0);
  EXPECT_EQ(s.kind, SignalKind::Custom);
  EXPECT_EQ(s.family, SignalKind::TwoSidedExp);
  EXPECT_NEAR(s.f_hat(0.0).real(), 4.0, 1e-15);
  EXPECT_EQ(s.tail_coeffs.size(), 3u);
}

}  // namespace
}  // namespace cwtasym
