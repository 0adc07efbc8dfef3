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

#include "gramcert/gram_assembly.hpp"

#include <string>

namespace gramcert {

std::size_t ProductTable::attained_classes() const {
  std::size_t n = 0;
  for (const auto& c : class_members_) n += !c.empty();
  return n;
}

ProductTable build_product_table(const Basis& basis) {
  ProductTable t;
  t.basis_ = std::make_shared<const Basis>(basis);
  t.double_ball_ =
      std::make_shared<const Basis>(ball(basis.generators(), 2 * basis.radius()));
  const std::size_t m = basis.size();
  const Basis& big = *t.double_ball_;
  t.pair_class_.resize(m * m);
  t.class_members_.assign(big.size(), {});

  std::vector<GroupElement> inverses;
  inverses.reserve(m);
  for (const GroupElement& a : basis.elements()) inverses.push_back(inverse(a));

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const GroupElement g = mul(inverses[i], basis[j]);
      const auto k = big.index_of(g);
      if (!k) {
        throw std::logic_error("build_product_table: product " + g.to_string() +
                               " missing from ball(" +
                               std::to_string(big.radius()) + ")");
      }
      const auto flat = static_cast<std::uint32_t>(i * m + j);
      t.pair_class_[flat] = static_cast<std::uint32_t>(*k);
      t.class_members_[*k].push_back(flat);
    }
  }
  return t;
}

ConstraintSystem::ConstraintSystem(std::size_t m,
                                   std::vector<Constraint> classes)
    : m_(m), classes_(std::move(classes)) {
  std::vector<char> covered(m * m, 0);
  for (const Constraint& c : classes_) {
    if (c.members.empty()) {
      throw std::invalid_argument("ConstraintSystem: empty class");
    }
    for (std::uint32_t flat : c.members) {
      if (flat >= m * m || covered[flat]) {
        throw std::invalid_argument(
            "ConstraintSystem: classes do not partition the matrix entries");
      }
      covered[flat] = 1;
    }
  }
  for (char c : covered) {
    if (!c) {
      throw std::invalid_argument(
          "ConstraintSystem: some matrix entry belongs to no class");
    }
  }
}

ConstraintSystem assemble(std::shared_ptr<const ProductTable> table,
                          const QElement& target) {
  const Basis& big = table->double_ball();
  const auto& members = table->class_members();
  for (const auto& [g, c] : target.terms()) {
    const auto k = big.index_of(g);
    if (!k || members[*k].empty()) {
      throw std::invalid_argument("assemble: target coefficient at " +
                                  g.to_string() +
                                  " is not reachable by any Gram entry");
    }
  }
  std::vector<Constraint> classes;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k].empty()) continue;
    Constraint c;
    c.element = k;
    c.members = members[k];
    c.rhs = target.coefficient(big[k]);
    c.rhs_value = c.rhs.get_d();
    classes.push_back(std::move(c));
  }
  ConstraintSystem cs(table->dim(), std::move(classes));
  cs.table_ = std::move(table);
  cs.target_ = target;
  return cs;
}

ConstraintSystem assemble(const Basis& basis, const QElement& target) {
  return assemble(std::make_shared<const ProductTable>(build_product_table(basis)),
                  target);
}

}  // namespace gramcert
