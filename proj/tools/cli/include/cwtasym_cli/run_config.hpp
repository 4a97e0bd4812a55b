// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "cwtasym/expansion.hpp"
#include "cwtasym/quadrature.hpp"
#include "cwtasym/signals.hpp"
#include "cwtasym/wavelets.hpp"

namespace cwtasym::cli {

struct SignalConfig {
  /// Built-in name, or "custom".
  std::string name = "lorentzian";
  double amplitude = 1.0;
  double width = 1.0;
  /// Custom signals only.
  std::string family;
  double tail_beta = std::numeric_limits<double>::infinity();
  std::vector<double> tail_coeffs;
  double rho = 0.0;
};

struct RunConfig {
  SignalConfig signal;
  std::string wavelet = "morlet";
  double u0 = 5.0;
  double b = 0.0;
  double a = 0.1;
  double a_min = 1e-3;
  double a_max = 1e-1;
  int a_count = 9;
  bool log_grid = true;
  int n = 1;
  std::string domain = "frequency";
  std::string mellin_method = "auto";
  std::string oracle = "fourier";
  std::string format = "csv";
  std::string out;
  int jobs = 1;
  double z_re = 1.0;
  double z_im = 0.0;
  bool remainder = false;
  QuadratureConfig quadrature;

  /// Throws PreconditionError on inconsistent settings.
  void validate() const;

  SignalSpec signal_spec() const;
  WaveletSpec wavelet_spec() const;
  MellinMethod mellin() const;
  /// Ascending a-grid from a_min, a_max, a_count, log_grid.
  std::vector<double> a_grid() const;
};

/// Overlays a JSON document onto `config`. Unknown keys and type mismatches
/// throw PreconditionError.
void apply_json(RunConfig& config, const std::string& json_text);

/// Reads and applies a JSON config file.
void apply_json_file(RunConfig& config, const std::string& path);

WaveletSpec parse_wavelet(const std::string& name, double u0);

}  // namespace cwtasym::cli
