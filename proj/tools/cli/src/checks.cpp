// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym_cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "cwtasym/error.hpp"
#include "cwtasym/expansion.hpp"
#include "cwtasym/mellin.hpp"
#include "cwtasym/oracle.hpp"
#include "cwtasym/specfun.hpp"
#include "cwtasym_cli/sweep.hpp"

namespace cwtasym::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Tolerances of the acceptance criteria.
constexpr double kCoeffTol = 1e-10;
constexpr int kCoeffMaxS = 10;
constexpr double kOracleRelTol = 1e-6;
constexpr double kMellinB0RelTol = 1e-8;
constexpr double kMellinB1RelTol = 1e-7;
constexpr double kMethodRelTol = 1e-6;
constexpr double kPcfTol = 1e-7;
constexpr double kOrderTol = 0.15;
constexpr double kHaarOrderTol = 0.20;
constexpr double kOracleAgreement = 0.05;
constexpr double kLeadingRatioTol = 0.02;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel(cplx x, cplx ref) { return std::abs(x - ref) / std::abs(ref); }

QuadratureConfig order_fit_config() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-24;
  return cfg;
}

CheckOutcome coefficients(const CheckOptions&) {
  const int n = kCoeffMaxS + 1;
  double worst = 0.0;
  bool zeros = true;
  const WaveletSpec wavelets[] = {WaveletSpec::morlet(2.0), WaveletSpec::morlet(5.0),
                                  WaveletSpec::mexican_hat(), WaveletSpec::haar()};
  for (const WaveletSpec& w : wavelets) {
    const CoefficientTable closed = small_u_coefficients(w, n);
    const CoefficientTable numeric = small_u_coefficients_numeric(
        [&w](cplx u) { return w.psi_hat_conj_analytic(u); }, w.lambda, n);
    for (int s = 0; s < n; ++s) {
      const auto i = static_cast<std::size_t>(s);
      worst = std::max(worst, std::abs(closed.coefficients[i] - numeric.coefficients[i]));
    }
    if (w.kind == WaveletKind::Haar) zeros = zeros && closed.coefficients[0] == cplx(0.0, 0.0);
    if (w.kind == WaveletKind::MexicanHat) {
      for (int s = 0; s < n; ++s) {
        if (s == 0 || s % 2 == 1) {
          zeros = zeros && closed.coefficients[static_cast<std::size_t>(s)] == cplx(0.0, 0.0);
        }
      }
    }
  }
  return {1, "", worst <= kCoeffTol && zeros,
          "max |closed - numeric| = " + sci(worst) + " (tol " + sci(kCoeffTol) +
              "), structural zeros " + (zeros ? "exact" : "VIOLATED")};
}

CheckOutcome oracle_consistency(const CheckOptions&) {
  const QuadratureConfig cfg;
  double worst = 0.0;
  std::string where;
  const SignalSpec signals[] = {SignalSpec::lorentzian(), SignalSpec::two_sided_exp(),
                                SignalSpec::gaussian()};
  const WaveletSpec wavelets[] = {WaveletSpec::morlet(5.0), WaveletSpec::mexican_hat(),
                                  WaveletSpec::haar()};
  int cases = 0;
  for (const auto& s : signals) {
    for (const auto& w : wavelets) {
      for (double a : {0.05, 0.2, 1.0}) {
        for (double b : {0.0, 1.0}) {
          const QuadratureResult t = cwt_time(s, w, b, a, cfg);
          const QuadratureResult f = cwt_fourier(s, w, b, a, cfg);
          const double r = rel(t.value, f.value);
          ++cases;
          if (!(r <= worst)) {
            worst = r;
            where = s.name() + "/" + w.name() + " a=" + sci(a) + " b=" + sci(b);
          }
        }
      }
    }
  }
  return {2, "", worst <= kOracleRelTol,
          std::to_string(cases) + " cases, max rel diff " + sci(worst) + " at " + where +
              " (tol " + sci(kOracleRelTol) + ")"};
}

CheckOutcome mellin_closed_forms(const CheckOptions&) {
  const QuadratureConfig cfg;
  double worst0 = 0.0;
  double worst1 = 0.0;
  for (double z : {1.0, 1.5, 2.0, 3.5}) {
    const cplx g = gamma_complex(z).value;
    const MellinValue m0 =
        mellin_transform(HSpec{SignalSpec::lorentzian(), 0.0, false}, z, MellinMethod::Auto, cfg);
    worst0 = std::max(worst0, rel(m0.value, kPi * g));
    const MellinValue m1 =
        mellin_transform(HSpec{SignalSpec::lorentzian(), 1.0, false}, z, MellinMethod::Auto, cfg);
    worst1 = std::max(worst1, rel(m1.value, kPi * g * std::pow(cplx(1.0, -1.0), -z)));
  }
  return {3, "", worst0 <= kMellinB0RelTol && worst1 <= kMellinB1RelTol,
          "b=0 max rel " + sci(worst0) + " (tol " + sci(kMellinB0RelTol) + "), b=1 max rel " +
              sci(worst1) + " (tol " + sci(kMellinB1RelTol) + ")"};
}

CheckOutcome mellin_methods(const CheckOptions&) {
  const QuadratureConfig cfg;
  const HSpec h{SignalSpec::two_sided_exp(), 2.0, false};
  double worst = 0.0;
  for (double z : {1.5, 2.5}) {
    const MellinValue tail = mellin_transform(h, z, MellinMethod::SplitTailAnalytic, cfg);
    const MellinValue eps = mellin_transform(h, z, MellinMethod::EpsExtrapolation, cfg);
    worst = std::max(worst, rel(eps.value, tail.value));
  }
  return {4, "", worst <= kMethodRelTol,
          "split-tail vs eps-extrapolation max rel " + sci(worst) + " (tol " + sci(kMethodRelTol) +
              ")"};
}

CheckOutcome parabolic_cylinder(const CheckOptions&) {
  const QuadratureConfig cfg;
  double worst = 0.0;
  for (double nu : {1.0, 2.0, 3.5}) {
    for (double w0 : {1.0, 5.0}) {
      const ComplexFn integrand = [w0](double t) { return std::exp(cplx(-0.5 * t * t, w0 * t)); };
      const MellinValue q = mellin_quadrature(
          integrand, nu, [](double t) { return std::exp(-0.5 * t * t); }, cfg, 0.0,
          2.0 * kPi / w0);
      const cplx g = gamma_complex(nu).value;
      const cplx closed =
          g * std::exp(-0.25 * w0 * w0) * parabolic_cylinder_D(-nu, cplx(0.0, -w0)).value;
      worst = std::max(worst, std::abs(q.value - closed) / std::abs(g));
    }
  }
  return {5, "", worst <= kPcfTol,
          "max |quadrature - closed| / |Gamma(nu)| = " + sci(worst) + " (tol " + sci(kPcfTol) +
              ")"};
}

CheckOutcome remainder_identity(const CheckOptions& opt) {
  const QuadratureConfig cfg;
  ExpansionOptions eo;
  eo.integral_remainder = true;
  eo.negate_mirrored_branch = opt.inject_sign_fault;
  bool ok = true;
  std::ostringstream detail;
  for (double a : {0.5, 0.1}) {
    const SignalSpec s = SignalSpec::lorentzian();
    const WaveletSpec w = WaveletSpec::morlet(5.0);
    const QuadratureResult oracle = cwt_fourier(s, w, 0.0, a, cfg);
    const ExpansionResult e = expand_frequency(s, w, 0.0, a, 3, cfg, eo);
    const cplx scaled = e.remainder_prefactor * e.remainder_estimate.value_or(0.0);
    const double gap = std::abs(oracle.value - (e.partial_sum + scaled));
    const double budget = oracle.abs_error_estimate + e.partial_sum_error +
                          e.remainder_prefactor * e.remainder_error +
                          4.0 * kEps * (std::abs(oracle.value) + std::abs(e.partial_sum) +
                                        std::abs(scaled));
    ok = ok && gap <= budget;
    detail << "a=" << sci(a) << " gap " << sci(gap) << " <= " << sci(budget) << "? "
           << (gap <= budget ? "yes" : "no") << "; ";
  }
  return {6, "", ok, detail.str()};
}

struct OrderCase {
  const char* label;
  SignalSpec signal;
  WaveletSpec wavelet;
  double b;
  int n;
  double expected;
  double tol;
};

CheckOutcome asymptotic_order(const CheckOptions& opt) {
  const QuadratureConfig fit = order_fit_config();
  const QuadratureConfig cfg;
  ExpansionOptions eo;
  eo.negate_mirrored_branch = opt.inject_sign_fault;
  const std::vector<double> grid = {1e-1, std::pow(10.0, -1.5), 1e-2, std::pow(10.0, -2.5)};
  const OrderCase cases[] = {
      {"morlet5 b=1 n=1", SignalSpec::lorentzian(), WaveletSpec::morlet(5.0), 1.0, 1, 1.5, kOrderTol},
      {"morlet5 b=1 n=3", SignalSpec::lorentzian(), WaveletSpec::morlet(5.0), 1.0, 3, 3.5, kOrderTol},
      {"mexhat b=0 n=3", SignalSpec::lorentzian(), WaveletSpec::mexican_hat(), 0.0, 3, 4.5, kOrderTol},
      {"haar b=0 n=2", SignalSpec::lorentzian(), WaveletSpec::haar(), 0.0, 2, 2.5, kHaarOrderTol},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const OrderCase& c : cases) {
    const ExpansionSeries series = frequency_series(c.signal, c.wavelet, c.b, c.n, cfg, eo);
    std::vector<double> errors;
    for (double a : grid) {
      cplx partial = 0.0;
      for (const cplx& t : series.terms(a)) partial += t;
      const QuadratureResult oracle = cwt_fourier(c.signal, c.wavelet, c.b, a, fit);
      errors.push_back(std::abs(oracle.value - partial));
    }
    const double order = convergence_order(grid, errors);
    const bool pass = std::abs(order - c.expected) <= c.tol * c.expected;
    ok = ok && pass;
    detail << c.label << ": " << sci(order) << " vs " << sci(c.expected) << "+-"
           << sci(c.tol * c.expected) << (pass ? " ok" : " FAIL") << "; ";
  }
  return {7, "", ok, detail.str()};
}

CheckOutcome frequency_time_agreement(const CheckOptions& opt) {
  const QuadratureConfig cfg;
  ExpansionOptions eo;
  eo.integral_remainder = true;
  eo.negate_mirrored_branch = opt.inject_sign_fault;
  const SignalSpec s = SignalSpec::lorentzian();
  const double a = 0.05;
  const ExpansionResult ef = expand_frequency(s, WaveletSpec::morlet(2.0), 0.0, a, 4, cfg, eo);
  const ExpansionResult et = expand_morlet_time(s, 0.0, a, 4, 2.0, cfg, eo);
  const QuadratureResult oracle = cwt_fourier(s, WaveletSpec::morlet(2.0), 0.0, a, cfg);
  const double gap = std::abs(ef.partial_sum - et.partial_sum);
  const double allowance = std::max(ef.scaled_remainder(), et.scaled_remainder());
  const double rf = rel(ef.partial_sum, oracle.value);
  const double rt = rel(et.partial_sum, oracle.value);
  const bool ok = gap <= allowance && rf <= kOracleAgreement && rt <= kOracleAgreement;
  return {8, "", ok,
          "|freq - time| " + sci(gap) + " <= max remainder " + sci(allowance) +
              "; rel to oracle freq " + sci(rf) + ", time " + sci(rt) + " (tol " +
              sci(kOracleAgreement) + ")"};
}

CheckOutcome leading_order(const CheckOptions&) {
  const QuadratureConfig cfg;
  const double a = 1e-3;
  bool ok = true;
  std::ostringstream detail;
  for (double u0 : {2.0, 5.0}) {
    const QuadratureResult w = cwt_fourier(SignalSpec::lorentzian(), WaveletSpec::morlet(u0), 0.0,
                                           a, cfg);
    const double lead = std::sqrt(2.0 * kPi) * std::exp(-0.5 * u0 * u0) * std::sqrt(a);
    const cplx ratio = w.value / lead;
    const bool pass = std::abs(ratio - 1.0) <= kLeadingRatioTol;
    ok = ok && pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", ratio.real());
    detail << "u0=" << sci(u0) << " ratio " << buf << (pass ? " ok" : " FAIL") << "; ";
  }
  return {9, "", ok, detail.str()};
}

CheckOutcome determinism(const CheckOptions&) {
  RunConfig config;
  config.wavelet = "mexhat";
  config.n = 3;
  config.a_min = 1e-3;
  config.a_max = 1e-1;
  config.a_count = 9;
  config.jobs = 1;
  const std::string first = sweep_csv(run_sweep(config));
  const std::string second = sweep_csv(run_sweep(config));
  config.jobs = 8;
  const std::string parallel = sweep_csv(run_sweep(config));
  const bool ok = first == second && first == parallel;
  return {10, "", ok,
          std::string("repeat ") + (first == second ? "identical" : "DIFFERS") + ", jobs 1 vs 8 " +
              (first == parallel ? "identical" : "DIFFERS")};
}

using CheckFn = CheckOutcome (*)(const CheckOptions&);

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{1, "coefficient closed forms vs numeric Taylor oracle"}, coefficients},
      {{2, "time vs Fourier oracle consistency"}, oracle_consistency},
      {{3, "closed-form Mellin values (Lorentzian)"}, mellin_closed_forms},
      {{4, "split-tail vs eps-extrapolated Mellin"}, mellin_methods},
      {{5, "parabolic cylinder moment identity"}, parabolic_cylinder},
      {{6, "exact remainder identity (m = 0)"}, remainder_identity},
      {{7, "asymptotic order reproduction"}, asymptotic_order},
      {{8, "frequency vs time-domain expansion"}, frequency_time_agreement},
      {{9, "leading-order closed form"}, leading_order},
      {{10, "sweep determinism"}, determinism},
  };
  return list;
}

}  // namespace

const std::vector<CheckInfo>& check_list() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CheckOutcome run_check(int id, const CheckOptions& options) {
  for (const Entry& e : entries()) {
    if (e.info.id != id) continue;
    CheckOutcome out;
    try {
      out = e.fn(options);
    } catch (const std::exception& ex) {
      out = {id, "", false, std::string("error: ") + ex.what()};
    }
    out.id = id;
    out.name = e.info.name;
    return out;
  }
  throw PreconditionError("unknown check id " + std::to_string(id));
}

std::vector<CheckOutcome> run_checks(const CheckOptions& options,
                                     const std::function<void(const CheckOutcome&)>& on_result) {
  std::vector<CheckOutcome> out;
  for (const CheckInfo& info : check_list()) {
    out.push_back(run_check(info.id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_outcome(const CheckOutcome& outcome) {
  char head[96];
  std::snprintf(head, sizeof head, "%s  %2d  %-52s", outcome.passed ? "PASS" : "FAIL", outcome.id,
                outcome.name.c_str());
  return std::string(head) + "  " + outcome.detail;
}

}  // namespace cwtasym::cli
