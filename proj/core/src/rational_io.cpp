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

#include "gramcert/rational_io.hpp"

#include <cctype>
#include <stdexcept>

namespace gramcert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not a rational number: '" +
                                std::string(whole) + "'");
  }
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("bad denominator in '" + std::string(text) +
                                  "'");
    }
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" +
                                  std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("not a rational number: '" +
                                  std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = int_part.empty() ? mpz_class(0)
                                     : mpz_class(std::string(int_part), 10);
    num *= scale;
    if (!frac.empty()) num += mpz_class(std::string(frac), 10);
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("format_decimal: digits < 0");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = q < 0;
  const Rational a = abs(q) * scale;
  // floor(a + 1/2)
  mpz_class twice = 2 * a.get_num() + a.get_den();
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(),
             mpz_class(2 * a.get_den()).get_mpz_t());
  std::string digits_str = scaled.get_str();
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits)) {
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) digits_str.insert(0, "-");
  return digits_str;
}

}  // namespace gramcert
