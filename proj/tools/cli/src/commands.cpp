// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include "cwtasym_cli/commands.hpp"

#include <functional>
#include <ostream>

#include "cwtasym/error.hpp"
#include "cwtasym/expansion.hpp"
#include "cwtasym/mellin.hpp"
#include "cwtasym/oracle.hpp"
#include "cwtasym_cli/format.hpp"
#include "cwtasym_cli/sweep.hpp"

namespace cwtasym::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (residual " << fmt(e.residual()) << ")\n";
    return kExitNotConverged;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConverged;
  }
}

bool json_out(const RunConfig& config) { return config.format == "json"; }

void warn_all(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

}  // namespace

int cmd_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const WaveletSpec w = config.wavelet_spec();
    const CoefficientTable t = small_u_coefficients(w, config.n);
    if (json_out(config)) {
      out << "{\"wavelet\":" << json_quote(w.name()) << ",\"lambda\":" << jnum(t.lambda)
          << ",\"n\":" << t.n << ",\"coefficients\":[";
      for (int s = 0; s < t.n; ++s) {
        const cplx c = t.coefficients[static_cast<std::size_t>(s)];
        out << (s ? "," : "") << "{\"s\":" << s << ",\"re\":" << jnum(c.real())
            << ",\"im\":" << jnum(c.imag()) << '}';
      }
      out << "]}\n";
    } else {
      out << "s,re,im\n";
      for (int s = 0; s < t.n; ++s) {
        const cplx c = t.coefficients[static_cast<std::size_t>(s)];
        out << s << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << '\n';
      }
    }
    return kExitOk;
  });
}

int cmd_cwt(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const SignalSpec s = config.signal_spec();
    const WaveletSpec w = config.wavelet_spec();
    struct Row {
      const char* oracle;
      QuadratureResult r;
    };
    std::vector<Row> rows;
    if (config.oracle != "fourier") {
      rows.push_back({"time", cwt_time(s, w, config.b, config.a, config.quadrature)});
    }
    if (config.oracle != "time") {
      rows.push_back({"fourier", cwt_fourier(s, w, config.b, config.a, config.quadrature)});
    }
    bool converged = true;
    if (json_out(config)) {
      out << "{\"a\":" << jnum(config.a) << ",\"b\":" << jnum(config.b) << ",\"results\":[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i].r;
        out << (i ? "," : "") << "{\"oracle\":\"" << rows[i].oracle << "\",\"re\":"
            << jnum(r.value.real()) << ",\"im\":" << jnum(r.value.imag())
            << ",\"abs_error_estimate\":" << jnum(r.abs_error_estimate)
            << ",\"evaluations\":" << r.evaluations
            << ",\"converged\":" << (r.converged ? "true" : "false") << '}';
      }
      out << "]}\n";
    } else {
      out << "a,b,oracle,re,im,abs_error_estimate,evaluations,converged\n";
      for (const auto& row : rows) {
        const auto& r = row.r;
        out << fmt(config.a) << ',' << fmt(config.b) << ',' << row.oracle << ','
            << fmt(r.value.real()) << ',' << fmt(r.value.imag()) << ','
            << fmt(r.abs_error_estimate) << ',' << r.evaluations << ',' << (r.converged ? 1 : 0)
            << '\n';
      }
    }
    for (const auto& row : rows) converged = converged && row.r.converged;
    return converged ? kExitOk : kExitNotConverged;
  });
}

int cmd_mellin(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const HSpec h{config.signal_spec(), config.b, false};
    const cplx z(config.z_re, config.z_im);
    const MellinValue m = mellin_transform(h, z, config.mellin(), config.quadrature);
    if (json_out(config)) {
      out << "{\"z_re\":" << jnum(z.real()) << ",\"z_im\":" << jnum(z.imag()) << ",\"method\":\""
          << mellin_method_name(m.method) << "\",\"re\":" << jnum(m.value.real())
          << ",\"im\":" << jnum(m.value.imag())
          << ",\"abs_error_estimate\":" << jnum(m.abs_error_estimate) << "}\n";
    } else {
      out << "z_re,z_im,method,re,im,abs_error_estimate\n"
          << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << mellin_method_name(m.method) << ','
          << fmt(m.value.real()) << ',' << fmt(m.value.imag()) << ','
          << fmt(m.abs_error_estimate) << '\n';
    }
    return kExitOk;
  });
}

int cmd_expand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const SignalSpec s = config.signal_spec();
    const WaveletSpec w = config.wavelet_spec();
    ExpansionOptions eo;
    eo.mellin_method = config.mellin();
    eo.integral_remainder = config.remainder;
    eo.empirical_remainder = !config.remainder;
    const ExpansionResult e =
        config.domain == "time"
            ? expand_time(s, w, config.b, config.a, config.n, config.quadrature, eo)
            : expand_frequency(s, w, config.b, config.a, config.n, config.quadrature, eo);
    warn_all(err, e.warnings);
    const cplx rem = e.remainder_estimate.value_or(cplx(0.0, 0.0));
    if (json_out(config)) {
      out << "{\"domain\":\"" << config.domain << "\",\"a\":" << jnum(e.a)
          << ",\"b\":" << jnum(e.b) << ",\"n\":" << e.n << ",\"lambda\":" << jnum(e.lambda)
          << ",\"terms\":[";
      for (std::size_t i = 0; i < e.terms.size(); ++i) {
        out << (i ? "," : "") << "{\"s\":" << i << ",\"re\":" << jnum(e.terms[i].real())
            << ",\"im\":" << jnum(e.terms[i].imag()) << '}';
      }
      out << "],\"partial_sum_re\":" << jnum(e.partial_sum.real())
          << ",\"partial_sum_im\":" << jnum(e.partial_sum.imag())
          << ",\"remainder_kind\":\"" << remainder_kind_name(e.remainder_kind)
          << "\",\"remainder_re\":" << jnum(rem.real()) << ",\"remainder_im\":"
          << jnum(rem.imag()) << ",\"remainder_prefactor\":" << jnum(e.remainder_prefactor)
          << "}\n";
    } else {
      out << "kind,s,re,im\n";
      for (std::size_t i = 0; i < e.terms.size(); ++i) {
        out << "term," << i << ',' << fmt(e.terms[i].real()) << ',' << fmt(e.terms[i].imag())
            << '\n';
      }
      out << "partial_sum,," << fmt(e.partial_sum.real()) << ',' << fmt(e.partial_sum.imag())
          << '\n';
      out << "remainder_" << remainder_kind_name(e.remainder_kind) << ",," << fmt(rem.real())
          << ',' << fmt(rem.imag()) << '\n';
      out << "remainder_prefactor,," << fmt(e.remainder_prefactor) << ",0\n";
    }
    return kExitOk;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SweepReport report = run_sweep(config);
    warn_all(err, report.warnings);
    out << (json_out(config) ? sweep_json(report) : sweep_csv(report));
    if (!report.all_converged()) {
      for (const SweepRow& r : report.rows) {
        if (!r.converged) err << "error: oracle did not converge at a=" << fmt(r.a) << '\n';
      }
      return kExitNotConverged;
    }
    return kExitOk;
  });
}

int cmd_validate(bool list_only, const CheckOptions& options, std::ostream& out,
                 std::ostream& err) {
  if (list_only) {
    for (const CheckInfo& c : check_list()) out << c.id << "  " << c.name << '\n';
    return kExitOk;
  }
  return guarded(err, [&] {
    bool all = true;
    run_checks(options, [&](const CheckOutcome& o) {
      out << format_outcome(o) << '\n' << std::flush;
      all = all && o.passed;
    });
    return all ? kExitOk : kExitCheckFailed;
  });
}

}  // namespace cwtasym::cli
