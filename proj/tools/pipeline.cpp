// Copyright 2026 The gramcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pipeline.hpp"

#include <fstream>
#include <ostream>

#include "gramcert/certificate_io.hpp"
#include "gramcert/rational_io.hpp"

namespace gramcert::cli {

Rational PipelineConfig::effective_solve_eps() const {
  if (solve_eps) return *solve_eps;
  const Rational backed = eps - solve_backoff;
  return backed > 0 ? backed : Rational(0);
}

int cmd_ball(const PipelineConfig& config, std::ostream& out) {
  const Basis basis = ball(standard_generators(), config.radius);
  out << basis.size() << " elements\n";
  if (config.list) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out << i << ' ' << basis.word_length(i) << ' ' << basis[i].to_string()
          << '\n';
    }
  }
  return kSuccess;
}

int cmd_solve(const PipelineConfig& config, std::ostream& out,
              std::ostream& err) {
  if (config.eps < 0 || config.effective_solve_eps() < 0) {
    err << "error: eps must be nonnegative\n";
    return kInputError;
  }
  const GeneratorSet gens = standard_generators();
  const Basis basis = ball(gens, config.radius);

  std::ofstream log_file;
  std::ostream* log = nullptr;
  if (!config.log.empty()) {
    log_file.open(config.log);
    if (!log_file) {
      err << "error: cannot open log file '" << config.log << "'\n";
      return kInputError;
    }
    log_file << "iteration,affine_residual,psd_residual\n";
    log = &log_file;
  }

  Rational solved_eps = config.effective_solve_eps();
  SolveReport report;
  if (config.bisect) {
    std::tie(solved_eps, report) =
        max_eps_bisection(gens, basis, config.solver, log);
  } else {
    report = solve_feasibility(assemble(basis, target(solved_eps, gens)),
                               config.solver, log);
  }

  out << "m=" << basis.size() << '\n'
      << "solve_eps=" << format_rational(solved_eps) << '\n'
      << "iterations=" << report.iterations << '\n'
      << "affine_residual=" << report.affine_residual << '\n'
      << "psd_residual=" << report.psd_residual << '\n'
      << "converged=" << (report.converged ? "true" : "false") << '\n';
  if (!report.converged) {
    err << "error: solver did not converge to tolerance "
        << config.solver.tolerance << "; no certificate written\n";
    return kNotConverged;
  }

  const Rational cert_eps = config.bisect ? solved_eps : config.eps;
  Certificate cert;
  try {
    cert = make_certificate(report.p, basis, cert_eps, config.denominator);
    save_certificate(config.out, cert);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << "certificate=" << config.out << '\n'
      << "eps=" << format_rational(cert.eps) << '\n'
      << "D=" << cert.denominator << '\n';
  return kSuccess;
}

namespace {

std::optional<VerificationReport> load_and_verify(const PipelineConfig& config,
                                                  std::ostream& err) {
  try {
    return verify(load_certificate(config.in), config.threshold);
  } catch (const ParseError& e) {
    err << "parse error: " << config.in << ": " << e.what() << '\n';
  } catch (const CertificateError& e) {
    err << "malformed certificate: " << e.what() << '\n';
  }
  return std::nullopt;
}

}  // namespace

int cmd_verify(const PipelineConfig& config, std::ostream& out,
               std::ostream& err) {
  const auto report = load_and_verify(config, err);
  if (!report) return kInputError;
  write_report(out, *report);
  return report->pass ? kSuccess : kVerificationFailed;
}

int cmd_report(const PipelineConfig& config, std::ostream& out,
               std::ostream& err) {
  const auto report = load_and_verify(config, err);
  if (!report) return kInputError;
  out << "eps=" << format_rational(report->eps) << " ~ "
      << format_decimal(report->eps, 4) << '\n'
      << "l1_residual=" << format_rational(report->l1_residual) << " ~ "
      << format_decimal(report->l1_residual, 6) << '\n'
      << "correction=" << format_rational(report->correction) << " ~ "
      << format_decimal(report->correction, 6) << '\n'
      << "eps_certified=" << format_rational(report->eps_certified) << " ~ "
      << format_decimal(report->eps_certified, 4) << '\n'
      << "normalized_gap=" << format_rational(report->normalized_gap)
      << " ~ " << format_decimal(report->normalized_gap, 4) << '\n'
      << "pass=" << (report->pass ? "true" : "false") << '\n';
  return kSuccess;
}

}  // namespace gramcert::cli
