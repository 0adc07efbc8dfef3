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

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gramcert/certify.hpp"

namespace gramcert {

/// Certificate parse failure; `line()` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// File layout:
//   SOSCERT v1
//   m=<int> D=<int> eps=<num>/<den> radius=<int>
//   generators=<count>
//   <count lines of n*n integers, row-major, canonical order>
//   matrix
//   <m lines of m integers: the rows of Q>
// Tokens are separated by single spaces. Nothing may follow the last row.
void write_certificate(std::ostream& os, const Certificate& cert);
std::string certificate_to_string(const Certificate& cert);

/// Strict parser; also checks that the generators form a valid generating
/// set in canonical order and that every row of Q sums to zero.
Certificate read_certificate(std::istream& is);
Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::string& path);
void save_certificate(const std::string& path, const Certificate& cert);

/// key=value lines, rationals as num/den.
void write_report(std::ostream& os, const VerificationReport& report);
std::string report_to_string(const VerificationReport& report);

}  // namespace gramcert
