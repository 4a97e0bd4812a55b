// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <iosfwd>

#include "cwtasym_cli/checks.hpp"
#include "cwtasym_cli/run_config.hpp"

namespace cwtasym::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitNotConverged = 3;

/// Each command writes its table to `out` and diagnostics to `err`, and
/// returns the exit code. Library exceptions are mapped to exit codes.
int cmd_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cwt(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_mellin(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_expand(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(bool list_only, const CheckOptions& options, std::ostream& out, std::ostream& err);

}  // namespace cwtasym::cli
