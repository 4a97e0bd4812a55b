// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "tails.hpp"

#include <cmath>

#include "cwtasym/mellin.hpp"

namespace cwtasym::detail {

cplx power_tail(double k, double rate, double split, double& err) {
  if (rate == 0.0) {
    err = 0.0;
    return std::pow(split, 1.0 - k) / (k - 1.0);
  }
  const SpecFunResult r = mellin_tail_analytic(1.0 - k, rate, split);
  err = r.abs_error_estimate;
  return r.value;
}

QuadratureResult polynomial_tail(const SignalSpec& signal, int m, double b, double a,
                                 double split) {
  QuadratureResult out;
  out.converged = true;
  const double mirror_sign = m % 2 == 0 ? 1.0 : -1.0;
  double previous = 0.0;
  for (std::size_t r = 0; r < signal.tail_coeffs.size(); ++r) {
    const double br = signal.tail_coeffs[r];
    if (br == 0.0) continue;
    // f_hat(+-u/a) ~ b_r (a/u)^(r + beta)
    const double k = static_cast<double>(r) + signal.tail_beta - m;
    const double weight = br * std::pow(a, static_cast<double>(r) + signal.tail_beta);
    double e1 = 0.0;
    double e2 = 0.0;
    const cplx term = weight * (power_tail(k, b / a, split, e1) +
                                mirror_sign * power_tail(k, -b / a, split, e2));
    if (previous > 0.0 && std::abs(term) > previous) break;
    out.value += term;
    out.abs_error_estimate += std::abs(weight) * (e1 + e2);
    previous = std::abs(term);
  }
  out.abs_error_estimate += previous;
  return out;
}

QuadratureResult haar_algebraic_tail(const SignalSpec& signal, double b, double a, double split) {
  // conj psi_hat(v) = (i/v)(1 - 2 e^{iv/2} + e^{iv}), f_hat(+-u/a) ~ sum_r b_r (a/u)^(r + beta).
  static constexpr double kKappa[3] = {1.0, -2.0, 1.0};
  QuadratureResult out;
  out.converged = true;
  double last = 0.0;
  for (double dir : {1.0, -1.0}) {
    for (std::size_t r = 0; r < signal.tail_coeffs.size(); ++r) {
      const double br = signal.tail_coeffs[r];
      if (br == 0.0) continue;
      const double k = static_cast<double>(r) + signal.tail_beta + 1.0;
      const double weight = br * std::pow(a, k - 1.0);
      cplx sum = 0.0;
      for (int j = 0; j < 3; ++j) {
        double err = 0.0;
        sum += kKappa[j] * power_tail(k, dir * (b / a + 0.5 * j), split, err);
        out.abs_error_estimate += std::abs(weight * kKappa[j]) * err;
      }
      const cplx term = cplx(0.0, dir) * weight * sum;
      out.value += term;
      last = std::abs(term);
    }
  }
  // First omitted term of the tail series, bounded by the last retained one.
  out.abs_error_estimate += last;
  return out;
}

}  // namespace cwtasym::detail
