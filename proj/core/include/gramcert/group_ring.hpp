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

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <map>
#include <stdexcept>
#include <vector>

#include "gramcert/matrix_group.hpp"

namespace gramcert {

using Rational = mpq_class;

/// Scalars the group ring is instantiated over: exact rationals and doubles.
template <typename S>
concept RingScalar =
    std::same_as<S, Rational> || std::same_as<S, double>;

template <RingScalar S>
S scalar_abs(const S& x) {
  if constexpr (std::same_as<S, Rational>) {
    return abs(x);
  } else {
    return std::abs(x);
  }
}

/// A finitely supported sum of group elements with coefficients in S.
/// Zero coefficients are never stored, so equality is structural.
template <RingScalar S>
class RingElement {
 public:
  using Terms = std::map<GroupElement, S>;

  RingElement() = default;

  static RingElement monomial(const GroupElement& g, S coefficient = S(1)) {
    RingElement r;
    r.add_term(g, coefficient);
    return r;
  }

  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Adds `c * g`, dropping the term if it cancels.
  void add_term(const GroupElement& g, const S& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  RingElement& operator+=(const RingElement& y) {
    for (const auto& [g, c] : y.terms_) add_term(g, c);
    return *this;
  }
  RingElement& operator-=(const RingElement& y) {
    for (const auto& [g, c] : y.terms_) add_term(g, -c);
    return *this;
  }
  RingElement& operator*=(const S& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [g, c] : terms_) c *= k;
    }
    return *this;
  }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Terms terms_;
};

using QElement = RingElement<Rational>;
using RElement = RingElement<double>;

template <RingScalar S>
RingElement<S> add(RingElement<S> x, const RingElement<S>& y) {
  x += y;
  return x;
}

template <RingScalar S>
RingElement<S> negate(RingElement<S> x) {
  x *= S(-1);
  return x;
}

template <RingScalar S>
RingElement<S> operator+(RingElement<S> x, const RingElement<S>& y) {
  x += y;
  return x;
}
template <RingScalar S>
RingElement<S> operator-(RingElement<S> x, const RingElement<S>& y) {
  x -= y;
  return x;
}
template <RingScalar S>
RingElement<S> operator*(const S& k, RingElement<S> x) {
  x *= k;
  return x;
}

/// Convolution product; terms are visited in map order, so the rational
/// result is independent of any scheduling.
template <RingScalar S>
RingElement<S> mul(const RingElement<S>& x, const RingElement<S>& y) {
  RingElement<S> r;
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) r.add_term(mul(g, h), a * b);
  }
  return r;
}

template <RingScalar S>
RingElement<S> operator*(const RingElement<S>& x, const RingElement<S>& y) {
  return mul(x, y);
}

/// The involution sum c_g g -> sum c_g g^{-1}.
template <RingScalar S>
RingElement<S> star(const RingElement<S>& x) {
  RingElement<S> r;
  for (const auto& [g, c] : x.terms()) r.add_term(inverse(g), c);
  return r;
}

template <RingScalar S>
bool is_hermitian(const RingElement<S>& x) {
  return star(x) == x;
}

template <RingScalar S>
S augmentation(const RingElement<S>& x) {
  S sum = 0;
  for (const auto& [g, c] : x.terms()) sum += c;
  return sum;
}

template <RingScalar S>
S l1_norm(const RingElement<S>& x) {
  S sum = 0;
  for (const auto& [g, c] : x.terms()) sum += scalar_abs(c);
  return sum;
}

inline RElement to_float(const QElement& x) {
  RElement r;
  for (const auto& [g, c] : x.terms()) r.add_term(g, c.get_d());
  return r;
}

/// |S| e - sum of generators.
template <RingScalar S = Rational>
RingElement<S> laplacian(const GeneratorSet& gens) {
  RingElement<S> r =
      RingElement<S>::monomial(identity(gens.dim()), S(static_cast<long>(gens.size())));
  for (const GroupElement& s : gens.members()) r.add_term(s, S(-1));
  return r;
}

/// Delta^2 - eps * Delta, exactly.
QElement target(const Rational& eps, const GeneratorSet& gens);

/// Coefficient vector of `x` over `basis`; throws std::out_of_range if the
/// support leaves the basis.
template <RingScalar S>
std::vector<S> to_dense(const RingElement<S>& x, const Basis& basis) {
  std::vector<S> v(basis.size(), S(0));
  for (const auto& [g, c] : x.terms()) {
    auto i = basis.index_of(g);
    if (!i) {
      throw std::out_of_range("to_dense: support element " + g.to_string() +
                              " is outside the basis");
    }
    v[*i] = c;
  }
  return v;
}

template <RingScalar S>
RingElement<S> from_dense(const std::vector<S>& v, const Basis& basis) {
  if (v.size() != basis.size()) {
    throw std::invalid_argument("from_dense: length does not match basis");
  }
  RingElement<S> r;
  for (std::size_t i = 0; i < v.size(); ++i) r.add_term(basis[i], v[i]);
  return r;
}

}  // namespace gramcert
