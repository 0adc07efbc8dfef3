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

#include "gramcert/certificate_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "gramcert/rational_io.hpp"

namespace gramcert {

void write_certificate(std::ostream& os, const Certificate& cert) {
  os << "SOSCERT v1\n";
  os << "m=" << cert.m << " D=" << cert.denominator
     << " eps=" << format_rational(cert.eps) << " radius=" << cert.radius
     << '\n';
  os << "generators=" << cert.generators.size() << '\n';
  for (const GroupElement& g : cert.generators) {
    bool first = true;
    for (const mpz_class& e : g.entries()) {
      os << (first ? "" : " ") << e;
      first = false;
    }
    os << '\n';
  }
  os << "matrix\n";
  for (std::size_t i = 0; i < cert.q.rows(); ++i) {
    for (std::size_t j = 0; j < cert.q.cols(); ++j) {
      os << (j ? " " : "") << cert.q(i, j);
    }
    os << '\n';
  }
}

std::string certificate_to_string(const Certificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string text) : text_(std::move(text)) {}

  std::size_t line() const { return line_; }

  std::string_view next(std::string_view what) {
    if (pos_ >= text_.size()) {
      throw ParseError(line_ + 1, "unexpected end of file, expected " +
                                      std::string(what));
    }
    ++line_;
    const std::size_t end = text_.find('\n', pos_);
    std::string_view out;
    if (end == std::string::npos) {
      out = std::string_view(text_).substr(pos_);
      pos_ = text_.size();
    } else {
      out = std::string_view(text_).substr(pos_, end - pos_);
      pos_ = end + 1;
    }
    if (!out.empty() && out.back() == '\r') {
      throw ParseError(line_, "carriage return not allowed");
    }
    return out;
  }

  bool at_end() const { return pos_ >= text_.size(); }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split_spaces(std::string_view line,
                                           std::size_t lineno) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t sp = line.find(' ', start);
    const std::string_view tok = line.substr(start, sp - start);
    if (tok.empty()) throw ParseError(lineno, "empty field (extra space?)");
    out.push_back(tok);
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

mpz_class parse_int(std::string_view tok, std::size_t lineno) {
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; }) ||
      (digits.size() > 1 && digits.front() == '0') ||
      (tok.front() == '-' && digits == "0")) {
    throw ParseError(lineno, "not a canonical integer: '" + std::string(tok) +
                                 "'");
  }
  return mpz_class(std::string(tok), 10);
}

std::size_t parse_count(std::string_view tok, std::size_t lineno) {
  const mpz_class v = parse_int(tok, lineno);
  if (v < 0 || !v.fits_ulong_p()) {
    throw ParseError(lineno, "expected a nonnegative count: '" +
                                 std::string(tok) + "'");
  }
  return v.get_ui();
}

std::string_view expect_key(std::string_view tok, std::string_view key,
                            std::size_t lineno) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key ||
      tok[key.size()] != '=') {
    throw ParseError(lineno, "expected " + std::string(key) + "=<value>, got '" +
                                 std::string(tok) + "'");
  }
  return tok.substr(key.size() + 1);
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  LineReader in(text);
  Certificate cert;

  if (in.next("header") != "SOSCERT v1") {
    throw ParseError(in.line(), "expected 'SOSCERT v1'");
  }

  const std::string_view param_line = in.next("parameter line");
  const auto params = split_spaces(param_line, in.line());
  if (params.size() != 4) {
    throw ParseError(in.line(), "expected 'm=.. D=.. eps=../.. radius=..'");
  }
  cert.m = parse_count(expect_key(params[0], "m", in.line()), in.line());
  cert.denominator = parse_int(expect_key(params[1], "D", in.line()), in.line());
  if (cert.denominator < 1) throw ParseError(in.line(), "D must be >= 1");
  {
    const std::string_view eps_text = expect_key(params[2], "eps", in.line());
    const auto slash = eps_text.find('/');
    if (slash == std::string_view::npos) {
      throw ParseError(in.line(), "eps must be written as num/den");
    }
    const mpz_class num = parse_int(eps_text.substr(0, slash), in.line());
    const mpz_class den = parse_int(eps_text.substr(slash + 1), in.line());
    if (den <= 0) throw ParseError(in.line(), "eps denominator must be > 0");
    cert.eps = Rational(num, den);
    cert.eps.canonicalize();
    if (cert.eps.get_num() != num || cert.eps.get_den() != den) {
      throw ParseError(in.line(), "eps is not in lowest terms");
    }
  }
  cert.radius = parse_count(expect_key(params[3], "radius", in.line()),
                            in.line());

  const std::string_view gens_line = in.next("generators line");
  const std::size_t ngens =
      parse_count(expect_key(gens_line, "generators", in.line()), in.line());
  if (ngens == 0) throw ParseError(in.line(), "need at least one generator");
  std::size_t dim = 0;
  for (std::size_t k = 0; k < ngens; ++k) {
    const std::string_view gen_line = in.next("generator matrix");
    const auto toks = split_spaces(gen_line, in.line());
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(toks.size())));
    if (n * n != toks.size() || (dim != 0 && n != dim)) {
      throw ParseError(in.line(), "generator has " +
                                      std::to_string(toks.size()) +
                                      " entries, not a consistent square");
    }
    dim = n;
    std::vector<mpz_class> entries;
    for (auto tok : toks) entries.push_back(parse_int(tok, in.line()));
    try {
      cert.generators.emplace_back(n, std::move(entries));
    } catch (const std::invalid_argument& e) {
      throw ParseError(in.line(), e.what());
    }
  }
  if (!std::is_sorted(cert.generators.begin(), cert.generators.end())) {
    throw ParseError(in.line(), "generators are not in canonical order");
  }
  try {
    GeneratorSet check(cert.generators);
  } catch (const std::invalid_argument& e) {
    throw ParseError(in.line(), e.what());
  }

  if (in.next("'matrix'") != "matrix") {
    throw ParseError(in.line(), "expected 'matrix'");
  }
  cert.q = DenseMatrix<mpz_class>(cert.m, cert.m);
  for (std::size_t i = 0; i < cert.m; ++i) {
    const std::string_view row_line = in.next("matrix row");
    const auto toks = split_spaces(row_line, in.line());
    if (toks.size() != cert.m) {
      throw ParseError(in.line(), "row has " + std::to_string(toks.size()) +
                                      " entries, expected " +
                                      std::to_string(cert.m));
    }
    mpz_class sum = 0;
    for (std::size_t j = 0; j < cert.m; ++j) {
      cert.q(i, j) = parse_int(toks[j], in.line());
      sum += cert.q(i, j);
    }
    if (sum != 0) {
      throw ParseError(in.line(), "row sums to " + sum.get_str() + ", not 0");
    }
  }
  if (!in.at_end()) {
    in.next("");
    throw ParseError(in.line(), "trailing content after the matrix");
  }
  return cert;
}

Certificate read_certificate(std::istream& is) {
  std::string text((std::istreambuf_iterator<char>(is)),
                   std::istreambuf_iterator<char>());
  return parse_certificate(text);
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_certificate(in);
}

void save_certificate(const std::string& path, const Certificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_certificate(out, cert);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void write_report(std::ostream& os, const VerificationReport& r) {
  os << "eps=" << format_rational(r.eps) << '\n'
     << "l1_residual=" << format_rational(r.l1_residual) << '\n'
     << "d=" << r.d << '\n'
     << "lemma_constant=" << format_rational(r.lemma_constant) << '\n'
     << "correction=" << format_rational(r.correction) << '\n'
     << "eps_certified=" << format_rational(r.eps_certified) << '\n'
     << "generators=" << r.generator_count << '\n'
     << "normalized_gap=" << format_rational(r.normalized_gap) << '\n'
     << "threshold=" << format_rational(r.threshold) << '\n'
     << "pass=" << (r.pass ? "true" : "false") << '\n';
}

std::string report_to_string(const VerificationReport& r) {
  std::ostringstream os;
  write_report(os, r);
  return os.str();
}

}  // namespace gramcert
