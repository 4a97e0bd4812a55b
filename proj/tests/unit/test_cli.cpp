// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cwtasym/error.hpp"
#include "cwtasym_cli/checks.hpp"
#include "cwtasym_cli/commands.hpp"
#include "cwtasym_cli/format.hpp"
#include "cwtasym_cli/run_config.hpp"
#include "cwtasym_cli/sweep.hpp"
#include "json.hpp"

namespace cwtasym::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

template <typename Cmd>
CmdResult run(Cmd cmd, const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cmd(config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

TEST(Format, RoundTripDigits) {
  EXPECT_EQ(fmt(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(fmt(std::sqrt(2.0))), std::sqrt(2.0));
  EXPECT_EQ(fmt(0.0), "0");
  EXPECT_EQ(jnum(std::nan("")), "null");
  EXPECT_EQ(json_quote("a\"b\\c"), "\"a\\\"b\\\\c\"");
}

TEST(RunConfig, LogGridHitsDecades) {
  RunConfig c;
  const auto g = c.a_grid();
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front(), 1e-3);
  EXPECT_EQ(g[4], 1e-2);
  EXPECT_EQ(g.back(), 1e-1);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
}

TEST(RunConfig, LinearGrid) {
  RunConfig c;
  c.log_grid = false;
  c.a_min = 0.1;
  c.a_max = 0.5;
  c.a_count = 5;
  const auto g = c.a_grid();
  EXPECT_NEAR(g[2], 0.3, 1e-15);
}

TEST(RunConfig, JsonOverridesDefaults) {
  RunConfig c;
  apply_json(c, R"({"wavelet": "haar", "n": 4, "b": 1.5, "signal": {"name": "gaussian",
                    "amplitude": 2}, "quadrature": {"rel_tol": 1e-9}, "log": false})");
  EXPECT_EQ(c.wavelet, "haar");
  EXPECT_EQ(c.n, 4);
  EXPECT_EQ(c.b, 1.5);
  EXPECT_EQ(c.signal.name, "gaussian");
  EXPECT_EQ(c.signal.amplitude, 2.0);
  EXPECT_EQ(c.quadrature.rel_tol, 1e-9);
  EXPECT_FALSE(c.log_grid);
  EXPECT_EQ(c.u0, 5.0);
}

TEST(RunConfig, RejectsUnknownKeys) {
  RunConfig c;
  EXPECT_THROW(apply_json(c, R"({"colour": "blue"})"), PreconditionError);
  EXPECT_THROW(apply_json(c, R"({"signal": {"name": "gaussian", "shape": 2}})"), PreconditionError);
  EXPECT_THROW(apply_json(c, R"({"quadrature": {"tolerance": 1}})"), PreconditionError);
  EXPECT_THROW(apply_json(c, "{not json"), PreconditionError);
  EXPECT_THROW(apply_json_file(c, CWTASYM_TEST_DATA_DIR "/unknown_key.json"), PreconditionError);
}

TEST(RunConfig, CustomSignal) {
  RunConfig c;
  apply_json(c, R"({"signal": {"name": "custom", "family": "twosidedexp", "amplitude": 1,
                    "width": 1, "tail_beta": 2, "tail_coeffs": [2, 0, -2], "rho": 0}})");
  const auto s = c.signal_spec();
  EXPECT_EQ(s.kind, SignalKind::Custom);
  EXPECT_EQ(s.family, SignalKind::TwoSidedExp);
  EXPECT_EQ(s.tail_coeffs.size(), 3u);
}

TEST(RunConfig, Validation) {
  RunConfig c;
  c.n = 0;
  EXPECT_THROW(c.validate(), PreconditionError);
  c = RunConfig{};
  c.a_min = 0.2;
  c.a_max = 0.1;
  EXPECT_THROW(c.validate(), PreconditionError);
  c = RunConfig{};
  c.domain = "laplace";
  EXPECT_THROW(c.validate(), PreconditionError);
  c = RunConfig{};
  c.jobs = 0;
  EXPECT_THROW(c.validate(), PreconditionError);
  EXPECT_THROW(parse_wavelet("shannon", 5.0), PreconditionError);
  EXPECT_EQ(parse_wavelet("mexhat", 5.0).kind, WaveletKind::MexicanHat);
}

TEST(Coeffs, HaarTable) {
  RunConfig c;
  c.wavelet = "haar";
  c.n = 3;
  const CmdResult r = run(cmd_coeffs, c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "s,re,im\n0,0,0\n1,0,-0.25\n2,0.125,0\n");
}

TEST(Coeffs, MexicanHatTable) {
  RunConfig c;
  c.wavelet = "mexhat";
  c.n = 4;
  const CmdResult r = run(cmd_coeffs, c);
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const auto cells = split(rows[3]);
  EXPECT_EQ(cells[0], "2");
  EXPECT_NEAR(std::stod(cells[1]), 2.5066282746, 1e-10);
}

TEST(Coeffs, RejectsEmptyTable) {
  RunConfig c;
  c.n = 0;
  const CmdResult r = run(cmd_coeffs, c);
  EXPECT_EQ(r.code, kExitInvalidArguments);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Coeffs, JsonCarriesSameValues) {
  RunConfig c;
  c.wavelet = "haar";
  c.n = 3;
  c.format = "json";
  const auto j = nlohmann::json::parse(run(cmd_coeffs, c).out);
  EXPECT_EQ(j["wavelet"], "haar");
  EXPECT_EQ(j["coefficients"][1]["im"].get<double>(), -0.25);
}

TEST(Cwt, BothOraclesAgree) {
  RunConfig c;
  c.a = 0.5;
  c.oracle = "both";
  const CmdResult r = run(cmd_cwt, c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3u);
  const double t = std::stod(split(rows[1])[3]);
  const double f = std::stod(split(rows[2])[3]);
  EXPECT_LT(std::abs(t - f), 1e-6 * std::abs(f));
}

TEST(Mellin, ShiftedLorentzian) {
  RunConfig c;
  c.b = 1.0;
  c.z_re = 2.0;
  c.format = "json";
  const CmdResult r = run(cmd_mellin, c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["re"].get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(j["im"].get<double>(), kPi / 2.0, 1e-9);
}

TEST(Mellin, BadMethodRejected) {
  RunConfig c;
  c.mellin_method = "magic";
  EXPECT_EQ(run(cmd_mellin, c).code, kExitInvalidArguments);
}

TEST(Expand, RemainderClosesToOracle) {
  RunConfig c;
  c.a = 0.1;
  c.n = 3;
  c.remainder = true;
  c.format = "json";
  const CmdResult e = run(cmd_expand, c);
  ASSERT_EQ(e.code, kExitOk) << e.err;
  const auto j = nlohmann::json::parse(e.out);
  EXPECT_EQ(j["remainder_kind"], "integral_m0");
  const double total = j["partial_sum_re"].get<double>() +
                       j["remainder_prefactor"].get<double>() * j["remainder_re"].get<double>();
  c.format = "json";
  c.oracle = "fourier";
  const auto o = nlohmann::json::parse(run(cmd_cwt, c).out);
  const double oracle = o["results"][0]["re"].get<double>();
  EXPECT_LT(std::abs(total - oracle), 1e-8 * std::abs(oracle));
}

TEST(Expand, TimeDomain) {
  RunConfig c;
  c.domain = "time";
  c.wavelet = "mexhat";
  c.n = 3;
  const CmdResult r = run(cmd_expand, c);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("partial_sum"), std::string::npos);
}

TEST(Sweep, MexicanHatOrder) {
  RunConfig c;
  apply_json_file(c, CWTASYM_TEST_DATA_DIR "/sweep_mexhat.json");
  const SweepReport rep = run_sweep(c);
  ASSERT_EQ(rep.rows.size(), 9u);
  ASSERT_TRUE(rep.fitted_order.has_value());
  EXPECT_NEAR(*rep.fitted_order, 4.5, 0.15 * 4.5);
}

TEST(Sweep, MorletLeadingTermAtOrigin) {
  RunConfig c;
  c.n = 1;
  const SweepReport rep = run_sweep(c);
  for (const SweepRow& r : rep.rows) {
    const double lead = std::sqrt(2.0 * kPi) * std::exp(-12.5) * std::sqrt(r.a);
    EXPECT_LT(std::abs(r.expansion - lead), 1e-10 * lead);
  }
  ASSERT_TRUE(rep.fitted_order.has_value());
  // At b = 0 every odd-index term vanishes for an even transform, so the first omitted
  // nonzero term is s = 2 and the error decays like a^{5/2}.
  EXPECT_NEAR(*rep.fitted_order, 2.5, 0.15 * 2.5);
}

TEST(Sweep, CsvSchema) {
  RunConfig c;
  c.wavelet = "mexhat";
  c.n = 3;
  c.a_count = 4;
  const CmdResult r = run(cmd_sweep, c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0],
            "a,oracle_re,oracle_im,expansion_re,expansion_im,abs_error,rel_error,n,converged");
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(split(rows[i]).size(), 9u);
  const auto summary = split(rows[5]);
  EXPECT_EQ(summary.size(), 9u);
  EXPECT_EQ(summary[0], "fitted_order");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Sweep, JsonMatchesCsvFields) {
  RunConfig c;
  c.wavelet = "mexhat";
  c.n = 3;
  c.a_count = 4;
  const auto csv = lines(run(cmd_sweep, c).out);
  c.format = "json";
  const auto j = nlohmann::json::parse(run(cmd_sweep, c).out);
  const auto header = split(csv[0]);
  ASSERT_EQ(j["rows"].size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& row = j["rows"][i];
    EXPECT_EQ(row.size(), header.size());
    const auto cells = split(csv[i + 1]);
    for (std::size_t k = 0; k < header.size(); ++k) {
      ASSERT_TRUE(row.contains(header[k])) << header[k];
      EXPECT_EQ(row[header[k]].get<double>(), std::stod(cells[k])) << header[k];
    }
  }
  EXPECT_EQ(j["fitted_order"].get<double>(), std::stod(split(csv[5])[1]));
}

TEST(Sweep, DeterministicAcrossRunsAndThreads) {
  RunConfig c;
  c.wavelet = "mexhat";
  c.n = 3;
  const std::string first = run(cmd_sweep, c).out;
  const std::string second = run(cmd_sweep, c).out;
  c.jobs = 8;
  const std::string threaded = run(cmd_sweep, c).out;
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, threaded);
}

TEST(Validate, ListsTenChecks) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_validate(true, {}, out, err), kExitOk);
  EXPECT_EQ(lines(out.str()).size(), 10u);
  EXPECT_EQ(check_list().size(), 10u);
}

TEST(Validate, InjectedSignFaultIsCaught) {
  CheckOptions opts;
  opts.inject_sign_fault = true;
  EXPECT_FALSE(run_check(6, opts).passed);
  EXPECT_FALSE(run_check(8, opts).passed);
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_validate(false, opts, out, err), kExitCheckFailed);
}

TEST(Validate, OutcomeLineFormat) {
  const CheckOutcome o = run_check(1, {});
  const std::string line = format_outcome(o);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find(o.passed ? "PASS" : "FAIL"), std::string::npos);
}

}  // namespace
}  // namespace cwtasym::cli
