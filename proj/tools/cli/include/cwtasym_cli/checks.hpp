// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cwtasym::cli {

struct CheckOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  /// Flip the sign factor of the mirrored Mellin branch in every
  /// frequency-domain expansion.
  bool inject_sign_fault = false;
};

struct CheckInfo {
  int id;
  std::string name;
};

/// Acceptance checks in execution order.
const std::vector<CheckInfo>& check_list();

/// Runs one check. Exceptions from the library count as failures.
CheckOutcome run_check(int id, const CheckOptions& options);

/// Runs every check, reporting each outcome as soon as it is known.
std::vector<CheckOutcome> run_checks(const CheckOptions& options,
                                     const std::function<void(const CheckOutcome&)>& on_result = {});

/// "PASS  <id>  <name>  <detail>" style line.
std::string format_outcome(const CheckOutcome& outcome);

}  // namespace cwtasym::cli
