// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym_cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cwtasym/error.hpp"
#include "json.hpp"

namespace cwtasym::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw PreconditionError("config: unknown key '" + item.key() + "' in " + where);
    }
  }
}

template <typename T>
void read(const json& obj, const char* key, T& target) {
  if (!obj.contains(key)) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw PreconditionError(std::string("config: key '") + key + "' has the wrong type");
  }
}

// Accepts a number or the strings "inf"/"infinity".
void read_extended(const json& obj, const char* key, double& target) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "infinity") {
      target = std::numeric_limits<double>::infinity();
      return;
    }
    throw PreconditionError(std::string("config: key '") + key + "' must be a number or \"inf\"");
  }
  read(obj, key, target);
}

void apply_signal(SignalConfig& sig, const json& j) {
  if (j.is_string()) {
    sig.name = j.get<std::string>();
    return;
  }
  if (!j.is_object()) throw PreconditionError("config: 'signal' must be a string or an object");
  reject_unknown(j, {"name", "amplitude", "width", "family", "tail_beta", "tail_coeffs", "rho"},
                 "signal");
  read(j, "name", sig.name);
  read(j, "amplitude", sig.amplitude);
  read(j, "width", sig.width);
  read(j, "family", sig.family);
  read_extended(j, "tail_beta", sig.tail_beta);
  read(j, "tail_coeffs", sig.tail_coeffs);
  read(j, "rho", sig.rho);
}

void apply_quadrature(QuadratureConfig& q, const json& j) {
  if (!j.is_object()) throw PreconditionError("config: 'quadrature' must be an object");
  reject_unknown(j,
                 {"rel_tol", "abs_tol", "max_subdivisions", "truncation_radius",
                  "max_truncation_radius", "eps0", "eps_levels"},
                 "quadrature");
  read(j, "rel_tol", q.rel_tol);
  read(j, "abs_tol", q.abs_tol);
  read(j, "max_subdivisions", q.max_subdivisions);
  read(j, "truncation_radius", q.truncation_radius);
  read(j, "max_truncation_radius", q.max_truncation_radius);
  read(j, "eps0", q.eps0);
  read(j, "eps_levels", q.eps_levels);
}

void check_choice(const std::string& value, const std::set<std::string>& choices,
                  const std::string& what) {
  if (!choices.count(value)) throw PreconditionError("invalid " + what + " '" + value + "'");
}

}  // namespace

WaveletSpec parse_wavelet(const std::string& name, double u0) {
  if (name == "morlet") return WaveletSpec::morlet(u0);
  if (name == "mexhat" || name == "mexican_hat") return WaveletSpec::mexican_hat();
  if (name == "haar") return WaveletSpec::haar();
  throw PreconditionError("unknown wavelet '" + name + "'");
}

void apply_json(RunConfig& config, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw PreconditionError("config: top level must be an object");
  reject_unknown(j,
                 {"signal", "wavelet", "u0", "b", "a", "a_min", "a_max", "a_count", "log", "n",
                  "domain", "mellin_method", "oracle", "format", "out", "jobs", "tol", "z",
                  "z_im", "remainder", "quadrature"},
                 "config");
  if (j.contains("signal")) apply_signal(config.signal, j.at("signal"));
  read(j, "wavelet", config.wavelet);
  read(j, "u0", config.u0);
  read(j, "b", config.b);
  read(j, "a", config.a);
  read(j, "a_min", config.a_min);
  read(j, "a_max", config.a_max);
  read(j, "a_count", config.a_count);
  read(j, "log", config.log_grid);
  read(j, "n", config.n);
  read(j, "domain", config.domain);
  read(j, "mellin_method", config.mellin_method);
  read(j, "oracle", config.oracle);
  read(j, "format", config.format);
  read(j, "out", config.out);
  read(j, "jobs", config.jobs);
  read(j, "z", config.z_re);
  read(j, "z_im", config.z_im);
  read(j, "remainder", config.remainder);
  if (j.contains("quadrature")) apply_quadrature(config.quadrature, j.at("quadrature"));
  read(j, "tol", config.quadrature.rel_tol);
}

void apply_json_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  apply_json(config, buffer.str());
}

void RunConfig::validate() const {
  check_choice(domain, {"frequency", "time"}, "domain");
  check_choice(mellin_method, {"auto", "tail", "eps", "quad", "closed"}, "mellin method");
  check_choice(oracle, {"time", "fourier", "both"}, "oracle");
  check_choice(format, {"csv", "json"}, "format");
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("a must be positive");
  if (!std::isfinite(b)) throw PreconditionError("b must be finite");
  if (!(a_min > 0.0) || !(a_min < a_max) || !std::isfinite(a_max)) {
    throw PreconditionError("grid needs 0 < a_min < a_max");
  }
  if (a_count < 2) throw PreconditionError("a_count must be at least 2");
  if (jobs < 1) throw PreconditionError("jobs must be at least 1");
  quadrature.validate();
  (void)signal_spec();
  (void)wavelet_spec();
}

SignalSpec RunConfig::signal_spec() const {
  if (signal.name == "custom") {
    return SignalSpec::custom(parse_signal_kind(signal.family), signal.amplitude, signal.width,
                              signal.tail_beta, signal.tail_coeffs, signal.rho);
  }
  switch (parse_signal_kind(signal.name)) {
    case SignalKind::Lorentzian:
      return SignalSpec::lorentzian(signal.amplitude, signal.width);
    case SignalKind::TwoSidedExp:
      return SignalSpec::two_sided_exp(signal.amplitude, signal.width);
    case SignalKind::Gaussian:
      return SignalSpec::gaussian(signal.amplitude, signal.width);
    case SignalKind::Custom:
      break;
  }
  throw PreconditionError("unknown signal '" + signal.name + "'");
}

WaveletSpec RunConfig::wavelet_spec() const { return parse_wavelet(wavelet, u0); }

MellinMethod RunConfig::mellin() const {
  if (mellin_method == "tail") return MellinMethod::SplitTailAnalytic;
  if (mellin_method == "eps") return MellinMethod::EpsExtrapolation;
  if (mellin_method == "quad") return MellinMethod::PureQuadrature;
  if (mellin_method == "closed") return MellinMethod::ClosedForm;
  return MellinMethod::Auto;
}

std::vector<double> RunConfig::a_grid() const {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(a_count));
  for (int i = 0; i < a_count; ++i) {
    const double t = static_cast<double>(i) / (a_count - 1);
    const double lo = std::log10(a_min);
    const double hi = std::log10(a_max);
    double v = log_grid ? std::pow(10.0, lo + t * (hi - lo)) : a_min + t * (a_max - a_min);
    if (i == 0) v = a_min;
    if (i == a_count - 1) v = a_max;
    grid.push_back(v);
  }
  return grid;
}

}  // namespace cwtasym::cli
