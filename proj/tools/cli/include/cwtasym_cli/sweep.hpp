// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwtasym_cli/run_config.hpp"

namespace cwtasym::cli {

struct SweepRow {
  double a = 0.0;
  cplx oracle{};
  cplx expansion{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  int n = 0;
  bool converged = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  /// Log-log slope of abs_error over the converged rows; empty when fewer
  /// than four usable rows remain.
  std::optional<double> fitted_order;
  std::vector<std::string> warnings;

  bool all_converged() const;
};

/// Evaluates the expansion and the oracle on config.a_grid(). Grid points
/// run on up to config.jobs threads; rows come back in ascending a.
SweepReport run_sweep(const RunConfig& config);

/// Header: a,oracle_re,oracle_im,expansion_re,expansion_im,abs_error,rel_error,n,converged
/// followed by one row per a and a final "fitted_order" row.
std::string sweep_csv(const SweepReport& report);
std::string sweep_json(const SweepReport& report);

}  // namespace cwtasym::cli
