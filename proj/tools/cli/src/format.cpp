// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym_cli/format.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace cwtasym::cli {

std::string fmt(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return std::signbit(value) ? "-0" : "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string jnum(double value) { return std::isfinite(value) ? fmt(value) : "null"; }

std::string json_quote(const std::string& text) { return nlohmann::json(text).dump(); }

}  // namespace cwtasym::cli
