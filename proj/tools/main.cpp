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

#include <CLI11.hpp>

#include <iostream>

#include "gramcert/rational_io.hpp"
#include "pipeline.hpp"

namespace {

gramcert::Rational rational_option(const std::string& text) {
  try {
    return gramcert::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  using gramcert::cli::PipelineConfig;
  PipelineConfig config;
  std::string eps_text = "561/2000";
  std::string solve_eps_text;
  std::string threshold_text = "1/6";
  std::string denominator_text = "1000000";
  std::string method = "dual";

  CLI::App app{"Exact sum-of-squares spectral-gap certificates for SL(3,Z)"};
  app.require_subcommand(1);

  auto* ball_cmd = app.add_subcommand("ball", "enumerate the word-length ball");
  ball_cmd->add_option("--radius", config.radius, "word length bound");
  ball_cmd->add_flag("--list", config.list, "print every element");

  auto* solve_cmd = app.add_subcommand("solve", "solve, round and write a certificate");
  solve_cmd->add_option("--radius", config.radius, "basis radius");
  solve_cmd->add_option("--eps", eps_text, "certified eps (num/den or decimal)");
  solve_cmd->add_option("--solve-eps", solve_eps_text,
                        "eps used by the numeric solver (default eps - 1/1000)");
  solve_cmd->add_option("--denominator", denominator_text, "rounding denominator D");
  solve_cmd->add_option("--tol", config.solver.tolerance, "solver tolerance");
  solve_cmd->add_option("--max-iter", config.solver.max_iterations,
                        "solver iteration budget");
  solve_cmd->add_option("--method", method, "dual or dykstra")
      ->check(CLI::IsMember({"dual", "dykstra"}));
  solve_cmd->add_flag("--bisect", config.bisect,
                      "bisect for the largest feasible eps");
  solve_cmd->add_option("--out", config.out, "certificate output path");
  solve_cmd->add_option("--log", config.log, "iteration log (CSV)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate exactly");
  auto* report_cmd = app.add_subcommand("report", "print the certified gap");
  for (auto* cmd : {verify_cmd, report_cmd}) {
    cmd->add_option("--in", config.in, "certificate path");
    cmd->add_option("--threshold", threshold_text, "required certified eps");
  }

  try {
    app.parse(argc, argv);
    config.eps = rational_option(eps_text);
    if (!solve_eps_text.empty()) config.solve_eps = rational_option(solve_eps_text);
    config.threshold = rational_option(threshold_text);
    config.denominator = mpz_class(denominator_text, 10);
    if (config.denominator < 1) throw CLI::ValidationError("--denominator must be >= 1");
    config.solver.method = method == "dykstra" ? gramcert::SolverMethod::kDykstra
                                               : gramcert::SolverMethod::kDualLbfgs;
    config.solver.validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gramcert::cli::kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gramcert::cli::kInputError;
  }

  if (*ball_cmd) return gramcert::cli::cmd_ball(config, std::cout);
  if (*solve_cmd) return gramcert::cli::cmd_solve(config, std::cout, std::cerr);
  if (*verify_cmd) return gramcert::cli::cmd_verify(config, std::cout, std::cerr);
  return gramcert::cli::cmd_report(config, std::cout, std::cerr);
}
