// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include "cwtasym/quadrature.hpp"
#include "cwtasym/signals.hpp"

namespace cwtasym::detail {

// Abel-regularized integral_U^inf u^(-k) exp(i rate u) du for real k.
cplx power_tail(double k, double rate, double split, double& err);

// integral_U^inf u^m [exp(i b u/a) f_hat(u/a) + (-1)^m exp(-i b u/a) f_hat(-u/a)] du from the
// tail metadata of f_hat, Abel-regularized. The error includes the last retained term.
QuadratureResult polynomial_tail(const SignalSpec& signal, int m, double b, double a, double split);

// integral_U^inf of the Fourier-domain Haar integrand
//   exp(i b u/a) f_hat(u/a) conj psi_hat(u) + exp(-i b u/a) f_hat(-u/a) conj psi_hat(-u)
// for an algebraic tail of f_hat.
QuadratureResult haar_algebraic_tail(const SignalSpec& signal, double b, double a, double split);

}  // namespace cwtasym::detail
