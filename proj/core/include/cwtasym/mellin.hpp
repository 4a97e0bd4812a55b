// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <complex>
#include <functional>

#include "cwtasym/quadrature.hpp"
#include "cwtasym/signals.hpp"
#include "cwtasym/specfun.hpp"

namespace cwtasym {

enum class MellinMethod { Auto, SplitTailAnalytic, EpsExtrapolation, ClosedForm, PureQuadrature };

const char* mellin_method_name(MellinMethod method);

struct MellinValue {
  cplx z{};
  cplx value{};
  MellinMethod method = MellinMethod::Auto;
  double abs_error_estimate = 0.0;
};

/// M[h; z] = lim_{eps -> 0+} integral_0^inf u^(z-1) h(u) exp(-eps u) du.
///
/// Auto resolves to PureQuadrature for super-algebraically decaying f_hat,
/// to SplitTailAnalytic when f_hat has an algebraic tail and b != 0, and to
/// PureQuadrature for b = 0 with Re z < tail_beta. An explicit PureQuadrature
/// request is rejected for an algebraic tail with b != 0. ClosedForm is
/// available for the Lorentzian family only.
///
/// Throws PreconditionError when Re z + rho <= 0 or the method does not apply,
/// ConvergenceError when the analytic tail does not settle or the
/// extrapolation corrections grow.
MellinValue mellin_transform(const HSpec& h, cplx z, MellinMethod method,
                             const QuadratureConfig& config);

/// Plain quadrature of integral_0^inf u^(z-1) h(u) du for an absolutely
/// integrable h. `envelope` bounds |h| pointwise; `rho` is the small-u order.
MellinValue mellin_quadrature(const ComplexFn& h, cplx z, const RealFn& envelope,
                              const QuadratureConfig& config, double rho = 0.0,
                              double period = 0.0);

/// Abel-regularized tail integral_U^inf u^(w-1) exp(i rate u) du, the
/// eps -> 0+ limit of the exp(-eps u) regularized integral, equal to
/// q^(-w) Gamma(w, q U) with q = -i rate. Requires rate != 0, U > 0.
SpecFunResult mellin_tail_analytic(cplx w, double rate, double split);

/// Limit eps -> 0+ of regularized(eps) by Neville extrapolation on the grid
/// eps0, eps0/2, ... (config.eps_levels points). Throws ConvergenceError when
/// the level-to-level correction grows.
QuadratureResult abel_limit(const std::function<QuadratureResult(double)>& regularized,
                            const QuadratureConfig& config);

enum class MorletSign { Plus, Minus };

/// Gamma(nu) exp(-omega0^2/4) D_{-nu}(-i omega0) for Plus, D_{-nu}(+i omega0)
/// for Minus. Plus equals integral_0^inf t^(nu-1) exp(i omega0 t - t^2/2) dt;
/// Minus is its mirror. Requires Re nu > 0.
MellinValue mellin_morlet_time(cplx nu, double omega0, MorletSign sign);

}  // namespace cwtasym
