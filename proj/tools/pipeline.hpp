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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gramcert/certify.hpp"
#include "gramcert/sdp.hpp"

namespace gramcert::cli {

/// Process exit codes; part of the command-line contract.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kNotConverged = 3,
};

struct PipelineConfig {
  std::size_t radius = 2;
  Rational eps = Rational(561, 2000);
  /// eps handed to the numeric solver; unset means eps - solve_backoff.
  std::optional<Rational> solve_eps;
  Rational solve_backoff = Rational(1, 1000);
  mpz_class denominator = 1000000;
  Rational threshold = Rational(1, 6);
  SolverConfig solver;
  bool bisect = false;
  bool list = false;
  std::string out = "sl3z.cert";
  std::string in = "sl3z.cert";
  std::string log;

  Rational effective_solve_eps() const;
};

int cmd_ball(const PipelineConfig& config, std::ostream& out);
int cmd_solve(const PipelineConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_verify(const PipelineConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_report(const PipelineConfig& config, std::ostream& out,
               std::ostream& err);

}  // namespace gramcert::cli
