// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <string>

namespace cwtasym::cli {

/// 17 significant digits; round-trips every double.
std::string fmt(double value);

/// fmt() for JSON: non-finite values become null.
std::string jnum(double value);

/// Minimal JSON string escaping for diagnostic text.
std::string json_quote(const std::string& text);

}  // namespace cwtasym::cli
