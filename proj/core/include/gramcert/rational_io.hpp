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

#include <string>
#include <string_view>

#include "gramcert/group_ring.hpp"

namespace gramcert {

/// Parses "p/q", an integer, or a decimal such as "-0.2805" exactly.
/// Throws std::invalid_argument on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Always "num/den" in lowest terms, e.g. "561/2000", "0/1".
std::string format_rational(const Rational& q);

/// Decimal expansion rounded half away from zero to `digits` places.
std::string format_decimal(const Rational& q, int digits);

}  // namespace gramcert
