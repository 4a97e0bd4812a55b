// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cwtasym/error.hpp"
#include "cwtasym/expansion.hpp"
#include "cwtasym/quadrature.hpp"
#include "cwtasym/wavelets.hpp"

namespace cwtasym {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);
const cplx kI(0.0, 1.0);

std::vector<WaveletSpec> all_wavelets() {
  return {WaveletSpec::morlet(2.0), WaveletSpec::morlet(5.0), WaveletSpec::mexican_hat(),
          WaveletSpec::haar()};
}

TEST(PsiHatConj, SpotValues) {
  EXPECT_NEAR(psi_hat_conj(WaveletSpec::morlet(5.0), 5.0).real(), kSqrt2Pi, 1e-15);
  EXPECT_EQ(psi_hat_conj(WaveletSpec::mexican_hat(), 0.0), cplx(0.0));
  EXPECT_EQ(psi_hat_conj(WaveletSpec::haar(), 0.0), cplx(0.0));
  EXPECT_LT(std::abs(psi_hat_conj(WaveletSpec::haar(), 1e-9)), 1e-9);
}

TEST(PsiHatConj, HaarAtTwoPiAgainstFourierQuadrature) {
  // psi_hat(2 pi) = integral psi(t) e^{-2 pi i t} dt over the two Haar panels.
  const double u = 2.0 * kPi;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  const auto kernel = [u](double t) { return std::exp(cplx(0.0, -u * t)); };
  const auto lo = integrate(kernel, 0.0, 0.5, cfg);
  const auto hi = integrate(kernel, 0.5, 1.0, cfg);
  const cplx psi_hat = lo.value - hi.value;
  EXPECT_LT(std::abs(psi_hat - (-2.0 * kI / kPi)), 1e-12);
  const cplx conj_hat = psi_hat_conj(WaveletSpec::haar(), u);
  EXPECT_LT(std::abs(conj_hat - std::conj(psi_hat)), 1e-13);
  EXPECT_LT(std::abs(conj_hat - 2.0 * kI / kPi), 1e-13);
}

TEST(PsiHatConj, HaarSeriesAndClosedFormMeetSmoothly) {
  const auto haar = WaveletSpec::haar();
  const cplx below = psi_hat_conj(haar, 0.999e-3);
  const cplx above = psi_hat_conj(haar, 1.001e-3);
  const cplx slope = (above - below) / 2e-6;
  EXPECT_LT(std::abs(slope - (-0.25 * kI)), 1e-3);
}

TEST(PsiHatConj, RealValuedGaussianWavelets) {
  for (const auto& w : {WaveletSpec::morlet(5.0), WaveletSpec::mexican_hat()}) {
    for (double u = -10.0; u <= 10.0; u += 0.37) {
      EXPECT_EQ(psi_hat_conj(w, u).imag(), 0.0);
    }
  }
}

TEST(PsiHatConj, HaarModulusIsEven) {
  const auto haar = WaveletSpec::haar();
  for (double u = 0.01; u < 30.0; u *= 1.7) {
    EXPECT_NEAR(std::abs(psi_hat_conj(haar, -u)), std::abs(psi_hat_conj(haar, u)), 1e-14);
  }
}

TEST(PsiHatConj, ParsevalAgainstTimeDomain) {
  // integral |psi|^2 dt = (1/2 pi) integral |psi_hat|^2 du.
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  for (const auto& w : {WaveletSpec::morlet(5.0), WaveletSpec::mexican_hat()}) {
    IntegrandHints hints;
    hints.envelope = [&](double u) {
      const double e = w.psi_hat_envelope(u);
      return e * e;
    };
    const auto freq = combine(
        integrate_real([&](double u) { return std::norm(psi_hat_conj(w, u)); }, 0.0, kInf, cfg,
                       hints),
        integrate_real([&](double u) { return std::norm(psi_hat_conj(w, -u)); }, 0.0, kInf, cfg,
                       hints));
    IntegrandHints th;
    th.envelope = [&](double t) { return w.psi_envelope(t) * w.psi_envelope(t); };
    const auto time = combine(
        integrate_real([&](double t) { return std::norm(w.psi(t)); }, 0.0, kInf, cfg, th),
        integrate_real([&](double t) { return std::norm(w.psi(-t)); }, 0.0, kInf, cfg, th));
    EXPECT_NEAR(freq.value.real() / (2.0 * kPi), time.value.real(), 1e-10) << w.name();
  }
}

TEST(Coefficients, MorletSecondCoefficient) {
  for (const double u0 : {1.0, 2.0, 5.0}) {
    const auto t = small_u_coefficients(WaveletSpec::morlet(u0), 3);
    const double want = kSqrt2Pi * std::exp(-u0 * u0 / 2.0) * (u0 * u0 / 2.0 - 0.5);
    EXPECT_NEAR(t.coefficients[2].real(), want, 1e-15 * std::max(1.0, std::abs(want)));
  }
}

TEST(Coefficients, MexicanHatFirstFive) {
  const auto t = small_u_coefficients(WaveletSpec::mexican_hat(), 5);
  const std::vector<cplx> want = {0.0, 0.0, kSqrt2Pi, 0.0, -kSqrt2Pi / 2.0};
  ASSERT_EQ(t.coefficients.size(), 5u);
  for (std::size_t s = 0; s < 5; ++s) EXPECT_LT(std::abs(t.coefficients[s] - want[s]), 1e-15);
}

TEST(Coefficients, HaarFirstFour) {
  // Cauchy product of i/u and 1 - 2 e^{iu/2} + e^{iu} = sum_k (i u)^k (1 - 2^{1-k}) / k!.
  std::vector<cplx> oracle;
  for (int s = 0; s < 4; ++s) {
    const int k = s + 1;
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    oracle.push_back(kI * std::pow(kI, k) * (1.0 - std::pow(2.0, 1 - k)) / fact);
  }
  const std::vector<cplx> frozen = {0.0, -kI / 4.0, 1.0 / 8.0, 7.0 * kI / 192.0};
  const auto t = small_u_coefficients(WaveletSpec::haar(), 4);
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_LT(std::abs(oracle[s] - frozen[s]), 1e-16);
    EXPECT_LT(std::abs(t.coefficients[s] - frozen[s]), 1e-16);
  }
}

TEST(Coefficients, StructuralZerosAreExact) {
  const auto haar = small_u_coefficients(WaveletSpec::haar(), 12);
  EXPECT_EQ(haar.coefficients[0], cplx(0.0));
  const auto mex = small_u_coefficients(WaveletSpec::mexican_hat(), 12);
  EXPECT_EQ(mex.coefficients[0], cplx(0.0));
  for (std::size_t s = 1; s < 12; s += 2) EXPECT_EQ(mex.coefficients[s], cplx(0.0));
}

TEST(Coefficients, ClosedFormMatchesNumericOracle) {
  for (const auto& w : all_wavelets()) {
    const auto closed = small_u_coefficients(w, 12);
    const auto numeric = small_u_coefficients_numeric(
        [&](cplx u) { return w.psi_hat_conj_analytic(u); }, w.lambda, 12);
    ASSERT_EQ(numeric.error_estimates.size(), 12u);
    for (int s = 0; s < 12; ++s) {
      EXPECT_LT(std::abs(closed.coefficients[s] - numeric.coefficients[s]), 1e-10)
          << w.name() << " s=" << s;
    }
  }
}

TEST(Coefficients, NumericOracleOnConstant) {
  const auto t = small_u_coefficients_numeric([](cplx) { return cplx(1.0); }, 1.0, 3);
  EXPECT_LT(std::abs(t.coefficients[0] - 1.0), 1e-14);
  EXPECT_LT(std::abs(t.coefficients[1]), 1e-14);
  EXPECT_LT(std::abs(t.coefficients[2]), 1e-14);
}

TEST(Coefficients, NumericOracleRejectsNonAnalyticInput) {
  EXPECT_THROW(small_u_coefficients_numeric([](cplx u) { return std::sqrt(u); }, 1.0, 4),
               ConvergenceError);
}

TEST(Coefficients, RejectsEmptyTable) {
  EXPECT_THROW(small_u_coefficients(WaveletSpec::morlet(5.0), 0), PreconditionError);
  EXPECT_THROW(WaveletSpec::morlet(0.0), PreconditionError);
}

TEST(PsiHatTail, HaarFirstOmittedTerms) {
  const double u = 0.1;
  const cplx tail = psi_hat_tail(WaveletSpec::haar(), u, 1);
  const cplx approx = -kI / 4.0 * u + 1.0 / 8.0 * u * u;
  EXPECT_LT(std::abs(tail - approx), 1e-3 * u);
  EXPECT_LT(std::abs(tail - (approx + 7.0 * kI / 192.0 * u * u * u)), 1e-5 * u);
}

TEST(PsiHatTail, MexicanHatVanishesAtZero) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(psi_hat_tail(WaveletSpec::mexican_hat(), 0.0, n), cplx(0.0));
}

TEST(PsiHatTail, ScalesAsFirstOmittedNonzeroPower) {
  struct Case {
    WaveletSpec w;
    int n;
    double expected;
  };
  const std::vector<Case> cases = {{WaveletSpec::morlet(2.0), 3, 3.0},
                                   {WaveletSpec::morlet(5.0), 2, 2.0},
                                   {WaveletSpec::mexican_hat(), 3, 4.0},
                                   {WaveletSpec::haar(), 2, 2.0},
                                   {WaveletSpec::haar(), 4, 4.0}};
  for (const auto& c : cases) {
    std::vector<double> us;
    std::vector<double> mags;
    const PsiHatTail tail(c.w, c.n);
    for (double u = 1e-4; u <= 0.1 * 1.0001; u *= std::sqrt(10.0)) {
      us.push_back(u);
      mags.push_back(std::abs(tail(u)));
    }
    const double slope = convergence_order(us, mags);
    EXPECT_NEAR(slope, c.expected, 0.1 * c.expected) << c.w.name() << " n=" << c.n;
  }
}

TEST(PsiHatTail, BoundedByFirstOmittedCoefficient) {
  for (const auto& w : all_wavelets()) {
    const int n = 3;
    const auto table = small_u_coefficients(w, 8);
    int first = n;
    while (table.coefficients[first] == cplx(0.0)) ++first;
    const double c = 2.0 * std::abs(table.coefficients[first]);
    for (double u = 1e-4; u <= 1e-1; u *= 2.0) {
      EXPECT_LE(std::abs(psi_hat_tail(w, u, n)), c * std::pow(u, first + w.lambda - 1.0))
          << w.name() << " u=" << u;
    }
  }
}

TEST(PsiHatTail, AgreesWithDirectSubtractionAwayFromZero) {
  for (const auto& w : all_wavelets()) {
    const auto table = small_u_coefficients(w, 5);
    for (const double u : {-3.0, 0.8, 2.5, 7.0}) {
      cplx partial = 0.0;
      for (int s = 0; s < 5; ++s) partial += table.coefficients[s] * std::pow(u, s);
      const cplx direct = psi_hat_conj(w, u) - partial;
      EXPECT_LT(std::abs(psi_hat_tail(w, u, 5) - direct), 1e-12 * (1.0 + std::abs(partial)))
          << w.name() << " u=" << u;
    }
  }
}

}  // namespace
}  // namespace cwtasym
