// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cwtasym/error.hpp"
#include "cwtasym/quadrature.hpp"

namespace cwtasym {
namespace {

TEST(Quadrature, DecayingExponential) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  IntegrandHints hints;
  hints.envelope = [](double u) { return std::exp(-u); };
  const auto r = integrate_real([](double u) { return std::exp(-u); }, 0.0, kInf, cfg, hints);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  EXPECT_LE(std::abs(r.value - 1.0), r.abs_error_estimate + 1e-15);
}

TEST(Quadrature, DampedOscillation) {
  QuadratureConfig cfg;
  IntegrandHints hints;
  hints.period = 2.0 * std::numbers::pi;
  hints.envelope = [](double u) { return std::exp(-u / 4.0); };
  const auto r = integrate([](double u) { return std::exp(cplx(-0.25, 1.0) * u); }, 0.0, kInf,
                           cfg, hints);
  const cplx expected = 1.0 / cplx(0.25, -1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(std::abs(r.value - expected), 1e-9 * std::abs(expected));
}

TEST(Quadrature, LorentzianOverRealLine) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  IntegrandHints hints;
  hints.envelope = [](double t) { return 1.0 / (1.0 + t * t); };
  const auto f = [](double t) { return 1.0 / (1.0 + t * t); };
  const auto left = integrate_real([&](double t) { return f(-t); }, 0.0, kInf, cfg, hints);
  const auto right = integrate_real(f, 0.0, kInf, cfg, hints);
  const auto total = combine(left, right);
  EXPECT_NEAR(total.value.real(), std::numbers::pi, 1e-10);
}

TEST(Quadrature, EndpointSingularity) {
  QuadratureConfig cfg;
  IntegrandHints hints;
  hints.endpoint_exponent = -0.5;
  const auto r = integrate_real([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0, cfg, hints);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-9);
}

TEST(Quadrature, ErrorEstimateIsHonest) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-6;
  IntegrandHints hints;
  hints.breakpoints = {0.3};
  const auto r = integrate_real([](double u) { return std::abs(u - 0.3); }, 0.0, 1.0, cfg, hints);
  const double exact = 0.5 * (0.09 + 0.49);
  EXPECT_LE(std::abs(r.value.real() - exact), r.abs_error_estimate + 1e-15);
}

TEST(Quadrature, ConfigValidation) {
  QuadratureConfig cfg;
  cfg.rel_tol = -1.0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg = QuadratureConfig{};
  cfg.eps_levels = 0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
}

TEST(Quadrature, InfiniteDomainNeedsEnvelope) {
  EXPECT_THROW(integrate_real([](double u) { return std::exp(-u); }, 0.0, kInf, QuadratureConfig{}),
               PreconditionError);
}

}  // namespace
}  // namespace cwtasym
