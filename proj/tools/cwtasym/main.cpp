// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cwtasym/error.hpp"
#include "cwtasym_cli/commands.hpp"

namespace {

using cwtasym::cli::RunConfig;

// Flag values land in `flags`; only flags given on the command line are
// copied onto the config after the config file has been applied.
struct FlagSet {
  RunConfig flags;
  std::string config_path;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;

  template <typename T>
  void add(CLI::App* app, const std::string& name, T RunConfig::*field, const std::string& help) {
    CLI::Option* opt = app->add_option(name, flags.*field, help);
    overrides.emplace_back(opt, [this, field](RunConfig& c) { c.*field = flags.*field; });
  }

  void attach(CLI::App* app) {
    CLI::Option* sig = app->add_option("--signal", flags.signal.name,
                                       "lorentzian | twosidedexp | gaussian | custom");
    overrides.emplace_back(sig, [this](RunConfig& c) { c.signal.name = flags.signal.name; });
    add(app, "--wavelet", &RunConfig::wavelet, "morlet | mexhat | haar");
    add(app, "--u0", &RunConfig::u0, "Morlet center frequency");
    add(app, "--b", &RunConfig::b, "translation");
    add(app, "--a", &RunConfig::a, "dilation");
    add(app, "--a-min", &RunConfig::a_min, "sweep grid minimum");
    add(app, "--a-max", &RunConfig::a_max, "sweep grid maximum");
    add(app, "--a-count", &RunConfig::a_count, "sweep grid size");
    CLI::Option* log = app->add_flag("--log,!--linear", flags.log_grid, "logarithmic grid");
    overrides.emplace_back(log, [this](RunConfig& c) { c.log_grid = flags.log_grid; });
    add(app, "--n", &RunConfig::n, "truncation order");
    add(app, "--domain", &RunConfig::domain, "frequency | time");
    add(app, "--mellin-method", &RunConfig::mellin_method, "auto | tail | eps | quad | closed");
    add(app, "--oracle", &RunConfig::oracle, "time | fourier | both");
    add(app, "--format", &RunConfig::format, "csv | json");
    add(app, "--out", &RunConfig::out, "output path (default stdout)");
    add(app, "--jobs", &RunConfig::jobs, "worker threads for sweeps");
    add(app, "--z", &RunConfig::z_re, "Mellin argument, real part");
    add(app, "--z-im", &RunConfig::z_im, "Mellin argument, imaginary part");
    CLI::Option* rem = app->add_flag("--remainder", flags.remainder,
                                     "integral remainder instead of oracle - partial sum");
    overrides.emplace_back(rem, [this](RunConfig& c) { c.remainder = flags.remainder; });
    CLI::Option* tol = app->add_option("--tol", flags.quadrature.rel_tol, "relative tolerance");
    overrides.emplace_back(tol,
                           [this](RunConfig& c) { c.quadrature.rel_tol = flags.quadrature.rel_tol; });
    app->add_option("--config", config_path, "JSON config file");
  }

  RunConfig resolve() const {
    RunConfig c;
    if (!config_path.empty()) cwtasym::cli::apply_json_file(c, config_path);
    for (const auto& [opt, apply] : overrides) {
      if (opt->count() > 0) apply(c);
    }
    return c;
  }
};

int run_with_output(const RunConfig& config,
                    const std::function<int(const RunConfig&, std::ostream&, std::ostream&)>& cmd) {
  if (config.out.empty()) return cmd(config, std::cout, std::cerr);
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << config.out << "' for writing\n";
    return cwtasym::cli::kExitInvalidArguments;
  }
  return cmd(config, file, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous wavelet transform: quadrature oracles and small-scale expansions"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::function<int(const RunConfig&, std::ostream&, std::ostream&)> cmd;
  };
  const std::vector<Sub> subs = {
      {"coeffs", "small-u coefficient table of a wavelet", cwtasym::cli::cmd_coeffs},
      {"cwt", "transform value by quadrature", cwtasym::cli::cmd_cwt},
      {"mellin", "regularized Mellin transform of h(u) = exp(ibu) f_hat(u)", cwtasym::cli::cmd_mellin},
      {"expand", "asymptotic expansion terms at one dilation", cwtasym::cli::cmd_expand},
      {"sweep", "expansion error over a dilation grid", cwtasym::cli::cmd_sweep},
  };
  std::vector<std::unique_ptr<FlagSet>> flagsets;
  std::vector<CLI::App*> apps;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    flagsets.push_back(std::make_unique<FlagSet>());
    flagsets.back()->attach(sub);
    apps.push_back(sub);
  }

  CLI::App* validate = app.add_subcommand("validate", "run the acceptance checks");
  bool list_only = false;
  bool inject_fault = false;
  validate->add_flag("--list", list_only, "print check names only");
  validate->add_flag("--inject-fault", inject_fault, "flip the mirrored-branch sign")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cwtasym::cli::kExitInvalidArguments;
  }

  if (validate->parsed()) {
    cwtasym::cli::CheckOptions options;
    options.inject_sign_fault = inject_fault;
    return cwtasym::cli::cmd_validate(list_only, options, std::cout, std::cerr);
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!apps[i]->parsed()) continue;
    RunConfig config;
    try {
      config = flagsets[i]->resolve();
    } catch (const cwtasym::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cwtasym::cli::kExitInvalidArguments;
    }
    return run_with_output(config, subs[i].cmd);
  }
  return cwtasym::cli::kExitInvalidArguments;
}
