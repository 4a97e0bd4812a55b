// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym_cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "cwtasym/error.hpp"
#include "cwtasym/oracle.hpp"
#include "cwtasym_cli/format.hpp"

namespace cwtasym::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

QuadratureResult oracle_value(const RunConfig& config, const SignalSpec& signal,
                              const WaveletSpec& wavelet, double a) {
  if (config.oracle == "time") return cwt_time(signal, wavelet, config.b, a, config.quadrature);
  QuadratureResult f = cwt_fourier(signal, wavelet, config.b, a, config.quadrature);
  if (config.oracle == "both") {
    const QuadratureResult t = cwt_time(signal, wavelet, config.b, a, config.quadrature);
    f.converged = f.converged && t.converged;
  }
  return f;
}

}  // namespace

bool SweepReport::all_converged() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
}

SweepReport run_sweep(const RunConfig& config) {
  config.validate();
  const SignalSpec signal = config.signal_spec();
  const WaveletSpec wavelet = config.wavelet_spec();
  ExpansionOptions options;
  options.mellin_method = config.mellin();
  const ExpansionSeries series =
      config.domain == "time"
          ? time_series(signal, wavelet, config.b, config.n, config.quadrature)
          : frequency_series(signal, wavelet, config.b, config.n, config.quadrature, options);

  const std::vector<double> grid = config.a_grid();
  SweepReport report;
  report.warnings = series.warnings;
  report.rows.resize(grid.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      SweepRow& row = report.rows[i];
      row.a = grid[i];
      row.n = config.n;
      const std::vector<cplx> terms = series.terms(row.a);
      for (const cplx& t : terms) row.expansion += t;
      try {
        const QuadratureResult q = oracle_value(config, signal, wavelet, row.a);
        row.oracle = q.value;
        row.converged = q.converged;
      } catch (const Error&) {
        row.oracle = cplx(kNaN, kNaN);
        row.converged = false;
      }
      row.abs_error = std::abs(row.oracle - row.expansion);
      row.rel_error = row.abs_error / std::abs(row.oracle);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(config.jobs), grid.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<double> as;
  std::vector<double> errs;
  for (const SweepRow& r : report.rows) {
    if (r.converged && r.abs_error > 0.0 && std::isfinite(r.abs_error)) {
      as.push_back(r.a);
      errs.push_back(r.abs_error);
    }
  }
  if (as.size() >= 4) report.fitted_order = convergence_order(as, errs);
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "a,oracle_re,oracle_im,expansion_re,expansion_im,abs_error,rel_error,n,converged\n";
  for (const SweepRow& r : report.rows) {
    out << fmt(r.a) << ',' << fmt(r.oracle.real()) << ',' << fmt(r.oracle.imag()) << ','
        << fmt(r.expansion.real()) << ',' << fmt(r.expansion.imag()) << ',' << fmt(r.abs_error)
        << ',' << fmt(r.rel_error) << ',' << r.n << ',' << (r.converged ? 1 : 0) << '\n';
  }
  out << "fitted_order," << (report.fitted_order ? fmt(*report.fitted_order) : "nan")
      << ",,,,,,,\n";
  return out.str();
}

std::string sweep_json(const SweepReport& report) {
  std::ostringstream out;
  out << "{\"rows\":[";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SweepRow& r = report.rows[i];
    if (i) out << ',';
    out << "{\"a\":" << jnum(r.a) << ",\"oracle_re\":" << jnum(r.oracle.real())
        << ",\"oracle_im\":" << jnum(r.oracle.imag()) << ",\"expansion_re\":"
        << jnum(r.expansion.real()) << ",\"expansion_im\":" << jnum(r.expansion.imag())
        << ",\"abs_error\":" << jnum(r.abs_error) << ",\"rel_error\":" << jnum(r.rel_error)
        << ",\"n\":" << r.n << ",\"converged\":" << (r.converged ? 1 : 0) << '}';
  }
  out << "],\"fitted_order\":" << (report.fitted_order ? jnum(*report.fitted_order) : "null")
      << ",\"warnings\":[";
  for (std::size_t i = 0; i < report.warnings.size(); ++i) {
    if (i) out << ',';
    out << json_quote(report.warnings[i]);
  }
  out << "]}\n";
  return out.str();
}

}  // namespace cwtasym::cli
