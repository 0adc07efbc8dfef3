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

#include "gramcert/group_ring.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace gramcert {
namespace {

using testing::random_element;

class GroupRingTest : public ::testing::Test {
 protected:
  GeneratorSet gens = standard_generators();
  Basis b2 = ball(gens, 2);
  QElement delta = laplacian<Rational>(gens);
  GroupElement e = identity();
};

TEST_F(GroupRingTest, AdditionBasics) {
  const QElement x = QElement::monomial(gens[0], 3) + QElement::monomial(e, 2);
  EXPECT_EQ(add(x, QElement{}), x);
  EXPECT_TRUE(add(x, negate(x)).is_zero());
  EXPECT_EQ(QElement::monomial(e, 3) + QElement::monomial(e, 2),
            QElement::monomial(e, 5));
  EXPECT_TRUE(QElement::monomial(e, 0).is_zero());
}

TEST_F(GroupRingTest, MonomialProduct) {
  const QElement p = QElement::monomial(gens[0]) * QElement::monomial(gens[1]);
  EXPECT_EQ(p, QElement::monomial(gens[0] * gens[1]));
}

TEST_F(GroupRingTest, LaplacianCoefficients) {
  EXPECT_EQ(delta.coefficient(e), 12);
  for (const GroupElement& s : gens.members()) EXPECT_EQ(delta.coefficient(s), -1);
  EXPECT_EQ(delta.support_size(), 13u);
  EXPECT_EQ(augmentation(delta), 0);
  EXPECT_EQ(l1_norm(delta), 24);
  EXPECT_EQ(star(delta), delta);
}

TEST_F(GroupRingTest, LaplacianIsHalfSumOfSquares) {
  QElement sum;
  for (const GroupElement& s : gens.members()) {
    const QElement u = QElement::monomial(e) - QElement::monomial(s);
    sum += star(u) * u;
  }
  EXPECT_EQ(Rational(1, 2) * sum, delta);
}

TEST_F(GroupRingTest, DeltaSquaredMatchesBruteForce) {
  const QElement d2 = delta * delta;
  const auto oracle = testing::brute_force_delta_squared();
  ASSERT_EQ(d2.support_size(), oracle.size());
  for (const auto& [k, v] : oracle) {
    EXPECT_EQ(d2.coefficient(testing::from_int(k)), v);
  }
  EXPECT_EQ(d2.coefficient(e), 156);
  EXPECT_EQ(l1_norm(d2), 576);
  for (const auto& [g, c] : d2.terms()) EXPECT_TRUE(b2.contains(g));
}

TEST_F(GroupRingTest, Target) {
  EXPECT_EQ(target(0, gens), delta * delta);
  const QElement a = target(Rational(561, 2000), gens);
  EXPECT_EQ(a.coefficient(e), Rational(76317, 500));
  EXPECT_EQ(augmentation(a), 0);
  EXPECT_TRUE(is_hermitian(a));
  EXPECT_THROW(target(-1, gens), std::invalid_argument);
}

TEST_F(GroupRingTest, AlgebraicPropertiesOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const QElement x = random_element(rng, b2, 6);
    const QElement y = random_element(rng, b2, 6);
    EXPECT_EQ(star(star(x)), x);
    EXPECT_EQ(star(x * y), star(y) * star(x));
    EXPECT_EQ(augmentation(x * y), augmentation(x) * augmentation(y));
    EXPECT_LE(l1_norm(x + y), l1_norm(x) + l1_norm(y));
    EXPECT_EQ(x * y, testing::naive_convolution(x, y));
  }
  EXPECT_EQ(l1_norm(QElement{}), 0);
}

TEST_F(GroupRingTest, FloatAgreesWithRational) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const QElement x = random_element(rng, b2, 8);
    const QElement y = random_element(rng, b2, 8);
    const QElement exact = x * y;
    const RElement approx = to_float(x) * to_float(y);
    for (const auto& [g, c] : exact.terms()) {
      EXPECT_NEAR(approx.coefficient(g), c.get_d(), 1e-9);
    }
    for (const auto& [g, c] : approx.terms()) {
      EXPECT_NEAR(c, exact.coefficient(g).get_d(), 1e-9);
    }
  }
}

TEST_F(GroupRingTest, DenseRoundTrip) {
  const std::vector<Rational> v = to_dense(delta, b2);
  EXPECT_EQ(v[0], 12);
  EXPECT_EQ(from_dense(v, b2), delta);
  const Basis b0 = ball(gens, 0);
  EXPECT_THROW(to_dense(delta, b0), std::out_of_range);
}

TEST_F(GroupRingTest, SquareDecompositionIdentity) {
  // 2u*u + 2v*v = (u+v)*(u+v) + (u-v)*(u-v), with u + v = 1 - gh.
  const Basis b3 = ball(gens, 3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, b3.size() - 1);
  const QElement one = QElement::monomial(e);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupElement g = b3[pick(rng)];
    const GroupElement h = b3[pick(rng)];
    const QElement u = one - QElement::monomial(g);
    const QElement v = QElement::monomial(g) * (one - QElement::monomial(h));
    EXPECT_EQ(u + v, one - QElement::monomial(g * h));
    const QElement lhs = Rational(2) * (star(u) * u) + Rational(2) * (star(v) * v) -
                         star(u + v) * (u + v);
    EXPECT_EQ(lhs, star(u - v) * (u - v));
  }
}

}  // namespace
}  // namespace gramcert
