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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gramcert {

/// An n x n integer matrix of determinant one, stored row-major with
/// arbitrary-precision entries. Equality, ordering and hashing all use the
/// full entry tuple.
class GroupElement {
 public:
  /// Validates that `entries` has n*n values and that the determinant is 1.
  GroupElement(std::size_t n, std::vector<mpz_class> entries);

  static GroupElement identity(std::size_t n = 3);

  std::size_t dim() const { return n_; }
  const mpz_class& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  std::span<const mpz_class> entries() const { return entries_; }

  mpz_class determinant() const;
  bool is_identity() const;
  GroupElement transpose() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  /// Lexicographic on (dimension, row-major entries).
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b);

 private:
  struct Unchecked {};
  GroupElement(Unchecked, std::size_t n, std::vector<mpz_class> entries)
      : n_(n), entries_(std::move(entries)) {}

  friend GroupElement mul(const GroupElement& g, const GroupElement& h);
  friend GroupElement inverse(const GroupElement& g);

  std::size_t n_ = 0;
  std::vector<mpz_class> entries_;
};

GroupElement identity(std::size_t n = 3);
GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return mul(g, h);
}

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Elementary matrix: identity with `value` at (row, col), row != col.
GroupElement elementary(std::size_t n, std::size_t row, std::size_t col,
                        long value);

/// A finite symmetric generating set. `inverse_index(i)` is the position of
/// the inverse of member i.
class GeneratorSet {
 public:
  /// Throws std::invalid_argument if the members are not distinct, contain
  /// the identity, mix dimensions or are not closed under inverses.
  explicit GeneratorSet(std::vector<GroupElement> members);

  std::size_t size() const { return members_.size(); }
  const GroupElement& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<GroupElement>& members() const { return members_; }
  std::size_t inverse_index(std::size_t i) const { return inverse_index_[i]; }
  bool contains_self_inverse() const { return self_inverse_; }
  std::size_t dim() const { return members_.front().dim(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<GroupElement> members_;
  std::vector<std::size_t> inverse_index_;
  bool self_inverse_ = false;
};

/// The twelve elementary matrices E_ij(+-1), i != j, of SL(3,Z): three upper
/// unipotent matrices, closed under transposition and inversion, sorted
/// lexicographically.
GeneratorSet standard_generators();

/// All group elements expressible as products of at most `radius` generators,
/// in canonical order: word length first, then lexicographic entries.
/// Position 0 is the identity.
class Basis {
 public:
  std::size_t size() const { return elements_.size(); }
  std::size_t radius() const { return radius_; }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GeneratorSet& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_.contains(g); }

  /// BFS depth at which element i was first reached.
  std::size_t word_length(std::size_t i) const { return witness_[i].size(); }
  /// Generator indices whose product (left to right) equals element i.
  std::span<const std::size_t> witness(std::size_t i) const {
    return witness_[i];
  }

 private:
  friend Basis ball(const GeneratorSet& gens, std::size_t radius);
  explicit Basis(GeneratorSet gens) : generators_(std::move(gens)) {}

  GeneratorSet generators_;
  std::size_t radius_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<std::size_t>> witness_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

Basis ball(const GeneratorSet& gens, std::size_t radius);

}  // namespace gramcert
