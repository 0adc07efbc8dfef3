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

#include "gramcert/matrix_group.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gramcert {

namespace {

// Fraction-free (Bareiss) elimination; exact for integer matrices.
mpz_class bareiss_determinant(std::size_t n, std::vector<mpz_class> a) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[k * n + c], a[swap_row * n + c]);
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

}  // namespace

GroupElement::GroupElement(std::size_t n, std::vector<mpz_class> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0 || entries_.size() != n_ * n_) {
    throw std::invalid_argument("GroupElement: expected " +
                                std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  if (determinant() != 1) {
    throw std::invalid_argument("GroupElement: determinant is not 1: " +
                                to_string());
  }
}

GroupElement GroupElement::identity(std::size_t n) {
  std::vector<mpz_class> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return GroupElement(Unchecked{}, n, std::move(e));
}

mpz_class GroupElement::determinant() const {
  return bareiss_determinant(n_, entries_);
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (entries_[i * n_ + j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

GroupElement GroupElement::transpose() const {
  std::vector<mpz_class> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = entries_[i * n_ + j];
  }
  return GroupElement(Unchecked{}, n_, std::move(t));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) {
      os << (j ? "," : "") << entries_[i * n_ + j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const GroupElement& a,
                                 const GroupElement& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const int c = cmp(a.entries_[k], b.entries_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GroupElement identity(std::size_t n) { return GroupElement::identity(n); }

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  if (g.n_ != h.n_) throw std::invalid_argument("mul: dimension mismatch");
  const std::size_t n = g.n_;
  std::vector<mpz_class> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& gik = g.entries_[i * n + k];
      if (gik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        r[i * n + j] += gik * h.entries_[k * n + j];
      }
    }
  }
  return GroupElement(GroupElement::Unchecked{}, n, std::move(r));
}

GroupElement inverse(const GroupElement& g) {
  // Gauss-Jordan over Q; det = 1 guarantees an integral result.
  const std::size_t n = g.n_;
  std::vector<mpq_class> a(n * 2 * n, 0);
  const std::size_t w = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = g.entries_[i * n + j];
    a[i * w + n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (a[p * w + k] == 0) ++p;
    if (p != k) {
      for (std::size_t c = 0; c < w; ++c) std::swap(a[k * w + c], a[p * w + c]);
    }
    const mpq_class pivot = a[k * w + k];
    for (std::size_t c = 0; c < w; ++c) a[k * w + c] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * w + k] == 0) continue;
      const mpq_class f = a[i * w + k];
      for (std::size_t c = 0; c < w; ++c) a[i * w + c] -= f * a[k * w + c];
    }
  }
  std::vector<mpz_class> r(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i * w + n + j];
      r[i * n + j] = v.get_num();
    }
  }
  return GroupElement(GroupElement::Unchecked{}, n, std::move(r));
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = g.dim();
  for (const mpz_class& e : g.entries()) {
    const std::size_t v = std::hash<long>{}(mpz_get_si(e.get_mpz_t()));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GroupElement elementary(std::size_t n, std::size_t row, std::size_t col,
                        long value) {
  if (row == col || row >= n || col >= n) {
    throw std::invalid_argument("elementary: need distinct in-range indices");
  }
  std::vector<mpz_class> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  e[row * n + col] = value;
  return GroupElement(n, std::move(e));
}

GeneratorSet::GeneratorSet(std::vector<GroupElement> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("GeneratorSet: empty");
  }
  const std::size_t n = members_.front().dim();
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> pos;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const GroupElement& g = members_[i];
    if (g.dim() != n) throw std::invalid_argument("GeneratorSet: mixed dims");
    if (g.is_identity()) {
      throw std::invalid_argument("GeneratorSet: contains the identity");
    }
    if (!pos.emplace(g, i).second) {
      throw std::invalid_argument("GeneratorSet: duplicate member " +
                                  g.to_string());
    }
  }
  inverse_index_.resize(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto it = pos.find(inverse(members_[i]));
    if (it == pos.end()) {
      throw std::invalid_argument("GeneratorSet: not closed under inverse: " +
                                  members_[i].to_string());
    }
    inverse_index_[i] = it->second;
    if (it->second == i) self_inverse_ = true;
  }
}

GeneratorSet standard_generators() {
  constexpr std::size_t n = 3;
  const GroupElement m1 = elementary(n, 0, 1, 1);
  const GroupElement m2 = elementary(n, 0, 2, 1);
  const GroupElement m3 = elementary(n, 1, 2, 1);
  std::vector<GroupElement> gens = {m1, m2, m3};
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(gens[i].transpose());
  for (std::size_t i = 0; i < 6; ++i) gens.push_back(inverse(gens[i]));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GeneratorSet(std::move(gens));
}

std::optional<std::size_t> Basis::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Basis ball(const GeneratorSet& gens, std::size_t radius) {
  Basis b(gens);
  b.radius_ = radius;
  auto add = [&b](GroupElement g, std::vector<std::size_t> word) {
    b.index_.emplace(g, b.elements_.size());
    b.elements_.push_back(std::move(g));
    b.witness_.push_back(std::move(word));
  };
  add(identity(gens.dim()), {});

  std::size_t layer_begin = 0;
  for (std::size_t depth = 1; depth <= radius; ++depth) {
    const std::size_t layer_end = b.elements_.size();
    std::vector<std::pair<GroupElement, std::vector<std::size_t>>> next;
    std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        GroupElement p = mul(b.elements_[i], gens[s]);
        if (b.index_.contains(p) || seen.contains(p)) continue;
        std::vector<std::size_t> word = b.witness_[i];
        word.push_back(s);
        seen.emplace(p, next.size());
        next.emplace_back(std::move(p), std::move(word));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [g, word] : next) add(std::move(g), std::move(word));
    layer_begin = layer_end;
    if (next.empty()) break;
  }
  return b;
}

}  // namespace gramcert
