// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cwtasym/error.hpp"
#include "cwtasym/oracle.hpp"

namespace cwtasym {
namespace {

constexpr double kPi = std::numbers::pi;

QuadratureConfig tight() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-20;
  return cfg;
}

// Complete-the-square closed form for a unit Gaussian against Morlet(u0).
cplx gaussian_morlet(double u0, double b, double a) {
  const double big_a = 1.0 + a * a;
  const cplx big_b(a * u0, b);
  return std::sqrt(a) * std::sqrt(2.0 * kPi / big_a) *
         std::exp(big_b * big_b / (2.0 * big_a) - u0 * u0 / 2.0);
}

TEST(Oracle, MexicanHatAnnihilatesSlowSignal) {
  const auto wide = SignalSpec::gaussian(1.0, 1e3);
  for (const double b : {0.0, 3.0}) {
    for (const double a : {0.1, 1.0}) {
      const auto r = cwt_time(wide, WaveletSpec::mexican_hat(), b, a, tight());
      // Leading surviving term: f''(b) a^{5/2} / 2 * integral s^2 psi(s) ds, about 2.5e-6 a^{5/2}.
      EXPECT_LT(std::abs(r.value), 3e-6 * std::pow(a, 2.5)) << b << " " << a;
    }
  }
}

TEST(Oracle, HaarLorentzianClosedForm) {
  const double want = std::atan(0.5) - (std::atan(1.0) - std::atan(0.5));
  const auto r = cwt_time(SignalSpec::lorentzian(), WaveletSpec::haar(), 0.0, 1.0, tight());
  EXPECT_NEAR(r.value.real(), want, 1e-13);
  EXPECT_EQ(r.value.imag(), 0.0);
  const auto f = cwt_fourier(SignalSpec::lorentzian(), WaveletSpec::haar(), 0.0, 1.0, tight());
  EXPECT_NEAR(f.value.real(), want, 1e-10);
}

TEST(Oracle, GaussianMorletClosedForm) {
  const auto g = SignalSpec::gaussian();
  for (const double u0 : {2.0, 5.0}) {
    for (const double b : {0.0, 0.7}) {
      for (const double a : {0.05, 0.3, 1.0}) {
        const cplx want = gaussian_morlet(u0, b, a);
        const auto f = cwt_fourier(g, WaveletSpec::morlet(u0), b, a, tight());
        const auto t = cwt_time(g, WaveletSpec::morlet(u0), b, a, tight());
        EXPECT_LT(std::abs(f.value - want), 1e-9 * std::abs(want)) << u0 << " " << b << " " << a;
        EXPECT_LT(std::abs(t.value - want), 1e-9 * std::abs(want)) << u0 << " " << b << " " << a;
      }
    }
  }
}

TEST(Oracle, LorentzianMorletBothPaths) {
  const auto s = SignalSpec::lorentzian();
  const auto w = WaveletSpec::morlet(5.0);
  const auto t = cwt_time(s, w, 0.0, 0.5, tight());
  const auto f = cwt_fourier(s, w, 0.0, 0.5, tight());
  EXPECT_LT(std::abs(t.value - f.value), 1e-6 * std::abs(f.value));
}

TEST(Oracle, CrossConsistencyMatrix) {
  for (const auto& s :
       {SignalSpec::lorentzian(), SignalSpec::two_sided_exp(), SignalSpec::gaussian()}) {
    for (const auto& w :
         {WaveletSpec::morlet(5.0), WaveletSpec::mexican_hat(), WaveletSpec::haar()}) {
      for (const double a : {0.05, 0.2, 1.0}) {
        for (const double b : {0.0, 1.0}) {
          const auto t = cwt_time(s, w, b, a, tight());
          const auto f = cwt_fourier(s, w, b, a, tight());
          const double scale = std::max(std::abs(t.value), std::abs(f.value));
          EXPECT_LE(std::abs(t.value - f.value), 1e-6 * scale)
              << s.name() << " " << w.name() << " a=" << a << " b=" << b;
          EXPECT_LE(std::abs(t.value - f.value),
                    t.abs_error_estimate + f.abs_error_estimate + 1e-14 * scale)
              << "error estimates too small: " << s.name() << " " << w.name() << " a=" << a
              << " b=" << b;
        }
      }
    }
  }
}

TEST(Oracle, FourierFormUnwindsAtOrigin) {
  // 2 pi W / sqrt(a) = integral f_hat(w) conj(psi_hat(a w)) dw at b = 0.
  const auto s = SignalSpec::lorentzian();
  const auto w = WaveletSpec::mexican_hat();
  const double a = 0.3;
  IntegrandHints hints;
  hints.envelope = [&](double om) { return s.f_hat_envelope(om); };
  const auto integrand = [&](double om) { return s.f_hat(om) * w.psi_hat_conj(a * om); };
  const auto direct = combine(integrate(integrand, 0.0, kInf, tight(), hints),
                              integrate([&](double om) { return integrand(-om); }, 0.0, kInf,
                                        tight(), hints));
  const auto r = cwt_fourier(s, w, 0.0, a, tight());
  EXPECT_LT(std::abs(r.value * 2.0 * kPi / std::sqrt(a) - direct.value),
            1e-10 * std::abs(direct.value));
}

TEST(Oracle, TranslationCovariance) {
  // Even signal against an even real wavelet: W(-b, a) = W(b, a).
  const auto s = SignalSpec::two_sided_exp();
  const auto w = WaveletSpec::mexican_hat();
  for (const double b : {0.3, 1.5}) {
    const auto plus = cwt_fourier(s, w, b, 0.4, tight());
    const auto minus = cwt_fourier(s, w, -b, 0.4, tight());
    EXPECT_LT(std::abs(plus.value - minus.value), 1e-11);
  }
}

TEST(Oracle, RejectsNonPositiveScale) {
  EXPECT_THROW(cwt_time(SignalSpec::lorentzian(), WaveletSpec::haar(), 0.0, 0.0, tight()),
               PreconditionError);
  EXPECT_THROW(cwt_fourier(SignalSpec::lorentzian(), WaveletSpec::haar(), 0.0, -1.0, tight()),
               PreconditionError);
}

}  // namespace
}  // namespace cwtasym
