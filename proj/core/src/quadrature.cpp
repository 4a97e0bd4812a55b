// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "cwtasym/error.hpp"

namespace cwtasym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxInitialPanels = 4'000'000;

// 21-point Kronrod abscissae and weights with the embedded 10-point Gauss rule
// (QUADPACK qk21). Index 10 is the centre; odd indices are the Gauss nodes.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745216017, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  cplx value;
  double error;
};

bool worse(const Panel& a, const Panel& b) { return a.error < b.error; }

// QUADPACK error heuristic applied to one real component.
double component_error(double diff, double resabs, double resasc) {
  double err = std::abs(diff);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return err;
}

class AdaptiveIntegrator {
 public:
  explicit AdaptiveIntegrator(const ComplexFn& f) : f_(f) {}

  void add_panel(double lo, double hi) {
    Panel p = evaluate(lo, hi);
    running_value_ += p.value;
    running_error_ += p.error;
    heap_.push_back(p);
    std::push_heap(heap_.begin(), heap_.end(), worse);
  }

  // Bisects the worst panel until the global error meets the tolerance.
  // Returns false when the bisection budget ran out.
  bool refine(const QuadratureConfig& cfg, double extra_error) {
    while (true) {
      double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(running_value_));
      if (running_error_ + extra_error <= target) {
        // Running sums drift; confirm with an exact recount before stopping.
        std::tie(running_value_, running_error_) = totals();
        target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(running_value_));
        if (running_error_ + extra_error <= target) return true;
      }
      if (heap_.empty()) return false;
      if (budget_used_ >= static_cast<std::size_t>(cfg.max_subdivisions)) return false;

      std::pop_heap(heap_.begin(), heap_.end(), worse);
      Panel worst = heap_.back();
      heap_.pop_back();
      running_value_ -= worst.value;
      running_error_ -= worst.error;
      const double mid = 0.5 * (worst.lo + worst.hi);
      const double width = worst.hi - worst.lo;
      if (width <= 256.0 * kEps * std::max(1.0, std::abs(mid)) || mid <= worst.lo ||
          mid >= worst.hi) {
        frozen_.push_back(worst);
        running_value_ += worst.value;
        running_error_ += worst.error;
        if (heap_.empty()) return false;
        continue;
      }
      add_panel(worst.lo, mid);
      add_panel(mid, worst.hi);
      ++budget_used_;
    }
  }

  // Deterministic sums: panels ordered by position.
  std::pair<cplx, double> totals() const {
    cplx value{};
    double error = 0.0;
    for (const auto& p : heap_) {
      value += p.value;
      error += p.error;
    }
    for (const auto& p : frozen_) {
      value += p.value;
      error += p.error;
    }
    return {value, error};
  }

  std::pair<cplx, double> ordered_totals() const {
    std::vector<Panel> all(heap_);
    all.insert(all.end(), frozen_.begin(), frozen_.end());
    std::sort(all.begin(), all.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    cplx value{};
    double error = 0.0;
    for (const auto& p : all) {
      value += p.value;
      error += p.error;
    }
    return {value, error};
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  Panel evaluate(double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    cplx fv1[10];
    cplx fv2[10];
    const cplx fc = f_(centre);
    cplx resg{};
    cplx resk = fc * kWgk[10];
    double abs_re = kWgk[10] * std::abs(fc.real());
    double abs_im = kWgk[10] * std::abs(fc.imag());
    for (int j = 0; j < 10; ++j) {
      const double dx = half * kXgk[j];
      const cplx f1 = f_(centre - dx);
      const cplx f2 = f_(centre + dx);
      fv1[j] = f1;
      fv2[j] = f2;
      resk += kWgk[j] * (f1 + f2);
      abs_re += kWgk[j] * (std::abs(f1.real()) + std::abs(f2.real()));
      abs_im += kWgk[j] * (std::abs(f1.imag()) + std::abs(f2.imag()));
      if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    evaluations_ += 21;

    const cplx mean = resk * 0.5;
    double asc_re = kWgk[10] * std::abs(fc.real() - mean.real());
    double asc_im = kWgk[10] * std::abs(fc.imag() - mean.imag());
    for (int j = 0; j < 10; ++j) {
      asc_re += kWgk[j] * (std::abs(fv1[j].real() - mean.real()) +
                           std::abs(fv2[j].real() - mean.real()));
      asc_im += kWgk[j] * (std::abs(fv1[j].imag() - mean.imag()) +
                           std::abs(fv2[j].imag() - mean.imag()));
    }
    const double h = std::abs(half);
    const cplx diff = (resk - resg) * half;
    const double err_re = component_error(diff.real(), abs_re * h, asc_re * h);
    const double err_im = component_error(diff.imag(), abs_im * h, asc_im * h);

    Panel p{lo, hi, resk * half, std::hypot(err_re, err_im)};
    if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag()) ||
        !std::isfinite(p.error)) {
      throw ConvergenceError("integrand is not finite on [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]",
                             std::numeric_limits<double>::infinity());
    }
    return p;
  }

  const ComplexFn& f_;
  std::vector<Panel> heap_;
  std::vector<Panel> frozen_;
  std::size_t evaluations_ = 0;
  std::size_t budget_used_ = 0;
  cplx running_value_{};
  double running_error_ = 0.0;
};

// Sorted panel edges for [lo, hi] honouring breakpoints, the geometric scale
// ladder and the half-period width limit.
std::vector<double> panel_edges(double lo, double hi, const IntegrandHints& hints) {
  std::vector<double> pts{lo, hi};
  for (double bp : hints.breakpoints) {
    if (bp > lo && bp < hi) pts.push_back(bp);
  }
  if (hints.scale > 0.0) {
    for (double step = hints.scale / 8.0; lo + step < hi; step *= 2.0) pts.push_back(lo + step);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (hints.period <= 0.0) return pts;

  const double max_width = 0.5 * hints.period;
  std::size_t total = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += static_cast<std::size_t>(std::ceil((pts[i + 1] - pts[i]) / max_width));
  }
  const double stretch =
      total > kMaxInitialPanels ? static_cast<double>(total) / kMaxInitialPanels : 1.0;
  std::vector<double> edges{pts.front()};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double len = pts[i + 1] - pts[i];
    const auto pieces =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / (max_width * stretch))));
    for (std::size_t k = 1; k < pieces; ++k) {
      edges.push_back(pts[i] + len * static_cast<double>(k) / static_cast<double>(pieces));
    }
    edges.push_back(pts[i + 1]);
  }
  return edges;
}

void add_range(AdaptiveIntegrator& ai, double lo, double hi, const IntegrandHints& hints) {
  const auto edges = panel_edges(lo, hi, hints);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) ai.add_panel(edges[i], edges[i + 1]);
}

// Upper bound for the integral of the envelope over [t, infinity).
double envelope_tail(const RealFn& envelope, double t, double length) {
  const double len = std::max(1.0, length);
  const ComplexFn mapped = [&](double x) -> cplx {
    const double one_minus = 1.0 - x;
    if (one_minus <= 0.0) return 0.0;
    const double u = t + len * x / one_minus;
    if (!std::isfinite(u)) return 0.0;
    const double v = envelope(u);
    if (v == 0.0) return 0.0;
    return v * len / (one_minus * one_minus);
  };
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-4;
  cfg.abs_tol = 1e-300;
  cfg.max_subdivisions = 400;
  AdaptiveIntegrator ai(mapped);
  IntegrandHints none;
  add_range(ai, 0.0, 1.0, none);
  ai.refine(cfg, 0.0);
  auto [value, error] = ai.ordered_totals();
  return std::abs(value) + error;
}

QuadratureResult integrate_regular(const ComplexFn& f, double lo, double hi,
                                   const QuadratureConfig& cfg, const IntegrandHints& hints) {
  AdaptiveIntegrator ai(f);
  QuadratureResult out;
  if (std::isfinite(hi)) {
    add_range(ai, lo, hi, hints);
    const bool ok = ai.refine(cfg, 0.0);
    auto [value, error] = ai.ordered_totals();
    out.value = value;
    out.abs_error_estimate = error;
    out.evaluations = ai.evaluations();
    out.converged = ok && error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    return out;
  }

  if (!hints.envelope) {
    throw PreconditionError("integrate: an infinite upper limit requires an envelope");
  }
  double cut = lo + cfg.truncation_radius;
  for (double bp : hints.breakpoints) cut = std::max(cut, bp + cfg.truncation_radius);
  if (hints.scale > 0.0) cut = std::max(cut, lo + 16.0 * hints.scale);
  const double max_cut = lo + std::max(cfg.max_truncation_radius, cut - lo);

  add_range(ai, lo, cut, hints);
  bool ok = ai.refine(cfg, 0.0);
  double tail = envelope_tail(hints.envelope, cut, cut - lo);
  if (hints.period == 0.0) {
    auto [value, error] = ai.totals();
    if (tail > 0.25 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
      // Slow non-oscillatory tail: integrate [cut, inf) in u = cut x^-4, which keeps
      // u^-k decay smooth at x = 0 for k >= 5/4.
      const ComplexFn mapped = [&f, cut](double x) -> cplx {
        const double x2 = x * x;
        const double u = cut / (x2 * x2);
        if (!std::isfinite(u)) return 0.0;
        return f(u) * (4.0 * u / x);
      };
      AdaptiveIntegrator tail_ai(mapped);
      tail_ai.add_panel(0.0, 0.5);
      tail_ai.add_panel(0.5, 1.0);
      QuadratureConfig tail_cfg = cfg;
      tail_cfg.abs_tol = std::max(cfg.abs_tol, 0.25 * cfg.rel_tol * std::abs(value));
      ok = tail_ai.refine(tail_cfg, 0.0) && ok;
      auto [tv, te] = tail_ai.ordered_totals();
      auto [hv, he] = ai.ordered_totals();
      out.value = hv + tv;
      out.abs_error_estimate = he + te;
      out.evaluations = ai.evaluations() + tail_ai.evaluations();
      out.converged = ok && out.abs_error_estimate <=
                                std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
      return out;
    }
  }
  while (true) {
    auto [value, error] = ai.totals();
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    if (tail <= 0.25 * target) break;
    if (cut >= max_cut) {
      ok = false;
      break;
    }
    const double next = std::min(lo + 2.0 * (cut - lo), max_cut);
    add_range(ai, cut, next, hints);
    cut = next;
    ok = ai.refine(cfg, 0.0) && ok;
    tail = envelope_tail(hints.envelope, cut, cut - lo);
  }
  if (ok) ok = ai.refine(cfg, tail);
  auto [value, error] = ai.ordered_totals();
  out.value = value;
  out.abs_error_estimate = error + tail;
  out.evaluations = ai.evaluations();
  out.converged =
      ok && out.abs_error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
  return out;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || rel_tol < 100.0 * kEps) {
    throw PreconditionError("rel_tol must be at least 100 machine epsilons");
  }
  if (!(abs_tol > 0.0)) throw PreconditionError("abs_tol must be positive");
  if (max_subdivisions <= 0) throw PreconditionError("max_subdivisions must be positive");
  if (!(truncation_radius > 0.0) || !(max_truncation_radius > 0.0)) {
    throw PreconditionError("truncation radii must be positive");
  }
  if (!(eps0 > 0.0)) throw PreconditionError("eps0 must be positive");
  if (eps_levels <= 0) throw PreconditionError("eps_levels must be positive");
}

QuadratureResult integrate(const ComplexFn& f, double lo, double hi,
                           const QuadratureConfig& config, const IntegrandHints& hints) {
  config.validate();
  if (!std::isfinite(lo) || std::isnan(hi) || hi == -kInf) {
    throw PreconditionError("integrate: lower limit must be finite and hi > -inf");
  }
  if (hi < lo) {
    QuadratureResult r = integrate(f, hi, lo, config, hints);
    r.value = -r.value;
    return r;
  }
  if (hi == lo) return QuadratureResult{0.0, 0.0, 0, true};

  const double sigma = hints.endpoint_exponent;
  if (sigma <= -1.0) throw PreconditionError("integrate: endpoint exponent must exceed -1");
  if (sigma >= 0.0) return integrate_regular(f, lo, hi, config, hints);

  // u = lo + x^m with m = 1/(1 + sigma) absorbs the u^sigma endpoint behaviour.
  double head = std::isfinite(hi) ? hi - lo : 1.0;
  head = std::min(head, hints.scale > 0.0 ? hints.scale : 1.0);
  for (double bp : hints.breakpoints) {
    if (bp > lo) head = std::min(head, bp - lo);
  }
  const double m = 1.0 / (1.0 + sigma);
  const ComplexFn mapped = [&](double x) -> cplx {
    return f(lo + std::pow(x, m)) * (m * std::pow(x, m - 1.0));
  };
  IntegrandHints head_hints;
  const QuadratureResult first =
      integrate_regular(mapped, 0.0, std::pow(head, 1.0 / m), config, head_hints);
  if (lo + head >= hi) return first;
  IntegrandHints rest_hints = hints;
  rest_hints.endpoint_exponent = 0.0;
  rest_hints.scale = 0.0;
  return combine(first, integrate_regular(f, lo + head, hi, config, rest_hints));
}

QuadratureResult integrate_real(const RealFn& f, double lo, double hi,
                                const QuadratureConfig& config, const IntegrandHints& hints) {
  const ComplexFn wrapped = [&](double x) -> cplx { return f(x); };
  return integrate(wrapped, lo, hi, config, hints);
}

QuadratureResult combine(const QuadratureResult& lhs, const QuadratureResult& rhs) {
  return QuadratureResult{lhs.value + rhs.value,
                          lhs.abs_error_estimate + rhs.abs_error_estimate,
                          lhs.evaluations + rhs.evaluations, lhs.converged && rhs.converged};
}

}  // namespace cwtasym
