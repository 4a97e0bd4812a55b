// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cwtasym/error.hpp"

namespace cwtasym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Lanczos coefficients for g = 607/128, 15 terms (Godfrey).
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

constexpr std::array<double, 22> kFactorials = {1.0,
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
                                                2432902008176640000.0,
                                                51090942171709440000.0};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_small_positive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() >= 1.0 && z.real() <= 22.0 &&
         z.real() == std::floor(z.real());
}

// Lanczos log Gamma, valid for Re z >= 1/2.
cplx log_gamma_lanczos(cplx z) {
  cplx tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  cplx ser = 0.999999999999997092;
  cplx y = z;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

// E1(x) = Gamma(0, x) by its convergent series; intended for |x| < ~8.
cplx exponential_integral_series(cplx x, double& err) {
  cplx sum = 0.0;
  cplx term = 1.0;
  double mag = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= -x / static_cast<double>(k);
    const cplx add = term / static_cast<double>(k);
    sum += add;
    mag += std::abs(add);
    if (std::abs(add) <= kEps * std::abs(sum)) break;
  }
  const cplx value = -kEulerGamma - std::log(x) - sum;
  err = kEps * (mag + std::abs(std::log(x)) + 1.0);
  return value;
}

SpecFunResult incomplete_gamma_cf(cplx s, cplx x) {
  constexpr double tiny = 1e-300;
  cplx b = x + 1.0 - s;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  double last = 1.0;
  int i = 1;
  for (; i < 20000; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx del = d * c;
    h *= del;
    last = std::abs(del - 1.0);
    if (last <= kEps) break;
  }
  if (last > 1e-14) {
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge", last);
  }
  const cplx value = std::exp(-x + s * std::log(x)) * h;
  return {value, std::abs(value) * kEps * (8.0 + std::sqrt(static_cast<double>(i))),
          SpecFunMethod::ContinuedFraction};
}

SpecFunResult incomplete_gamma_series(cplx s, cplx x) {
  if (is_nonpositive_integer(s)) {
    // Gamma(0, x) = E1(x), then Gamma(s, x) = (Gamma(s+1, x) - x^s e^{-x}) / s downward.
    double err = 0.0;
    cplx value = exponential_integral_series(x, err);
    const int m = static_cast<int>(-s.real());
    const cplx ex = std::exp(-x);
    for (int j = 1; j <= m; ++j) {
      const double sj = -static_cast<double>(j);
      value = (value - std::pow(x, sj) * ex) / sj;
      err /= static_cast<double>(j);
      err += kEps * std::abs(value);
    }
    return {value, err, SpecFunMethod::Series};
  }
  // Lower incomplete gamma by its power series, subtracted from Gamma(s).
  cplx term = 1.0 / s;
  cplx sum = term;
  double mag = std::abs(term);
  int k = 1;
  for (; k < 20000; ++k) {
    term *= x / (s + static_cast<double>(k));
    sum += term;
    mag += std::abs(term);
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  if (k == 20000) {
    throw ConvergenceError("upper_incomplete_gamma: series did not converge",
                           std::abs(term) / std::abs(sum));
  }
  const cplx prefactor = std::exp(-x + s * std::log(x));
  const cplx lower = prefactor * sum;
  const SpecFunResult g = gamma_complex(s);
  const cplx value = g.value - lower;
  const double err = g.abs_error_estimate + std::abs(prefactor) * mag * 4.0 * kEps +
                     kEps * std::abs(value);
  return {value, err, SpecFunMethod::Series};
}

}  // namespace

cplx sin_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx r(z.real() - n, z.imag());
  cplx s = std::sin(kPi * r);
  if (std::fmod(std::abs(n), 2.0) == 1.0) s = -s;
  return s;
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw DomainError("Gamma has a pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_lanczos(1.0 - z);
  }
  return log_gamma_lanczos(z);
}

SpecFunResult gamma_complex(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw DomainError("Gamma has a pole at z = " + std::to_string(z.real()));
  }
  if (is_small_positive_integer(z)) {
    return {kFactorials[static_cast<std::size_t>(z.real()) - 1], 0.0, SpecFunMethod::Series};
  }
  SpecFunResult out;
  if (z.real() < 0.5) {
    out.value = kPi / (sin_pi(z) * std::exp(log_gamma_lanczos(1.0 - z)));
    out.method = SpecFunMethod::Reflection;
  } else {
    out.value = std::exp(log_gamma_lanczos(z));
    out.method = SpecFunMethod::Series;
  }
  if (z.imag() == 0.0) out.value = cplx(out.value.real(), 0.0);
  out.abs_error_estimate =
      std::abs(out.value) * kEps * (16.0 + std::abs(z) * (1.0 + std::log1p(std::abs(z))));
  return out;
}

cplx reciprocal_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) {
    cplx v = sin_pi(z) * std::exp(log_gamma_lanczos(1.0 - z)) / kPi;
    if (z.imag() == 0.0) v = cplx(v.real(), 0.0);
    return v;
  }
  return 1.0 / gamma_complex(z).value;
}

SpecFunResult upper_incomplete_gamma(cplx s, cplx x) {
  if (x == cplx(0.0, 0.0)) {
    if (s.real() <= 0.0) {
      throw DomainError("upper_incomplete_gamma: x = 0 requires Re s > 0");
    }
    return gamma_complex(s);
  }
  const bool on_negative_axis = x.imag() == 0.0 && x.real() < 0.0;
  if (std::abs(x) >= std::max(4.0, std::abs(s)) && !on_negative_axis) {
    try {
      return incomplete_gamma_cf(s, x);
    } catch (const ConvergenceError&) {
      // fall through to the series, which converges for every finite x
    }
  }
  return incomplete_gamma_series(s, x);
}

SpecFunResult kummer_m(cplx a, cplx b, cplx w) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("kummer_m: b must not be a non-positive integer");
  }
  if (w.real() < 0.0) {
    const SpecFunResult inner = kummer_m(b - a, b, -w);
    const cplx scale = std::exp(w);
    const cplx value = scale * inner.value;
    return {value, std::abs(scale) * inner.abs_error_estimate + kEps * std::abs(value),
            SpecFunMethod::Series};
  }
  using lcplx = std::complex<long double>;
  const lcplx la(a.real(), a.imag());
  const lcplx lb(b.real(), b.imag());
  const lcplx lw(w.real(), w.imag());
  lcplx term = 1.0L;
  lcplx sum = 1.0L;
  long double mag = 1.0L;
  const double wabs = std::abs(w);
  int k = 0;
  for (; k < 20000; ++k) {
    const long double kk = static_cast<long double>(k);
    term *= (la + kk) / (lb + kk) * lw / (kk + 1.0L);
    if (term == lcplx(0.0L, 0.0L)) break;
    sum += term;
    mag += std::abs(term);
    if (k > wabs && std::abs(term) <= 1e-19L * std::abs(sum)) break;
  }
  if (k == 20000) {
    throw ConvergenceError("kummer_m: series did not converge",
                           static_cast<double>(std::abs(term) / std::abs(sum)));
  }
  const cplx value(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  const double rounding =
      4.0 * static_cast<double>(std::numeric_limits<long double>::epsilon() * mag);
  return {value, rounding + kEps * std::abs(value), SpecFunMethod::Series};
}

SpecFunResult parabolic_cylinder_D(cplx nu, cplx z) {
  if (std::abs(z) > 30.0 || nu.real() < -20.0) {
    throw DomainError("parabolic_cylinder_D: outside the supported box |z| <= 30, Re nu >= -20");
  }
  const cplx w = z * z / 2.0;
  const SpecFunResult m1 = kummer_m(-nu / 2.0, 0.5, w);
  const SpecFunResult m2 = kummer_m((1.0 - nu) / 2.0, 1.5, w);
  const cplx r1 = reciprocal_gamma((1.0 - nu) / 2.0);
  const cplx r2 = reciprocal_gamma(-nu / 2.0);
  const cplx pre = std::pow(cplx(2.0, 0.0), nu / 2.0) * std::exp(-z * z / 4.0);
  const cplx t1 = std::sqrt(kPi) * r1 * m1.value;
  const cplx t2 = std::sqrt(2.0 * kPi) * z * r2 * m2.value;
  const cplx value = pre * (t1 - t2);
  const double err =
      std::abs(pre) * (std::sqrt(kPi) * std::abs(r1) * m1.abs_error_estimate +
                       std::sqrt(2.0 * kPi) * std::abs(z * r2) * m2.abs_error_estimate +
                       16.0 * kEps * (std::abs(t1) + std::abs(t2)));
  return {value, err, SpecFunMethod::Series};
}

}  // namespace cwtasym
