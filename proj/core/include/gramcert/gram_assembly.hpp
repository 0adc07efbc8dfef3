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

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "gramcert/group_ring.hpp"
#include "gramcert/matrix_group.hpp"

namespace gramcert {

/// Row-major dense matrix over an arbitrary scalar.
template <typename S>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<S>& data() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Classifies each index pair (i, j) of a basis ball(r) by the group element
/// a_i^{-1} a_j, located in ball(2r). Pairs are flattened as i * m + j.
class ProductTable {
 public:
  std::size_t dim() const { return basis_->size(); }
  const Basis& basis() const { return *basis_; }
  const Basis& double_ball() const { return *double_ball_; }

  std::size_t pair_class(std::size_t i, std::size_t j) const {
    return pair_class_[i * dim() + j];
  }
  /// Indexed by position in double_ball(); empty for unattained elements.
  const std::vector<std::vector<std::uint32_t>>& class_members() const {
    return class_members_;
  }
  std::size_t attained_classes() const;

 private:
  friend ProductTable build_product_table(const Basis& basis);

  std::shared_ptr<const Basis> basis_;
  std::shared_ptr<const Basis> double_ball_;
  std::vector<std::uint32_t> pair_class_;
  std::vector<std::vector<std::uint32_t>> class_members_;
};

/// Throws std::logic_error if some a_i^{-1} a_j is missing from ball(2r).
ProductTable build_product_table(const Basis& basis);

/// One affine condition: the entries of P listed in `members` sum to `rhs`.
struct Constraint {
  std::size_t element = 0;  // index into the double ball, or caller-defined
  std::vector<std::uint32_t> members;
  Rational rhs;
  double rhs_value = 0.0;
};

/// Affine conditions on an m x m Gram matrix. The member lists partition the
/// m^2 entries, which makes the Euclidean projection closed-form per class.
class ConstraintSystem {
 public:
  /// Throws std::invalid_argument unless `classes` partition {0..m^2-1}.
  ConstraintSystem(std::size_t m, std::vector<Constraint> classes);

  std::size_t dim() const { return m_; }
  const std::vector<Constraint>& classes() const { return classes_; }

  /// Set by assemble(); null for hand-built systems.
  const std::shared_ptr<const ProductTable>& table() const { return table_; }
  const QElement& target() const { return target_; }

 private:
  friend ConstraintSystem assemble(std::shared_ptr<const ProductTable>,
                                   const QElement&);

  std::size_t m_;
  std::vector<Constraint> classes_;
  std::shared_ptr<const ProductTable> table_;
  QElement target_;
};

/// One constraint per attained element g: sum over class(g) of P = target_g.
/// Throws std::invalid_argument if the target has support outside the
/// attained classes.
ConstraintSystem assemble(std::shared_ptr<const ProductTable> table,
                          const QElement& target);
ConstraintSystem assemble(const Basis& basis, const QElement& target);

/// sum_ij P_ij a_i^{-1} a_j.
template <RingScalar S>
RingElement<S> evaluate_gram(const DenseMatrix<S>& p,
                             const ProductTable& table) {
  const std::size_t m = table.dim();
  if (p.rows() != m || p.cols() != m) {
    throw std::invalid_argument("evaluate_gram: matrix is " +
                                std::to_string(p.rows()) + "x" +
                                std::to_string(p.cols()) + ", basis has " +
                                std::to_string(m) + " elements");
  }
  RingElement<S> r;
  const auto& classes = table.class_members();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) continue;
    S sum = 0;
    for (std::uint32_t flat : classes[k]) sum += p.data()[flat];
    r.add_term(table.double_ball()[k], sum);
  }
  return r;
}

template <RingScalar S>
RingElement<S> evaluate_gram(const DenseMatrix<S>& p, const Basis& basis) {
  return evaluate_gram(p, build_product_table(basis));
}

}  // namespace gramcert
