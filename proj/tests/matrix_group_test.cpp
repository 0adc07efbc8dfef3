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

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace gramcert {
namespace {

GroupElement m(std::initializer_list<long> e) {
  return GroupElement(3, std::vector<mpz_class>(e.begin(), e.end()));
}

const GroupElement kM1 = m({1, 1, 0, 0, 1, 0, 0, 0, 1});
const GroupElement kM2 = m({1, 0, 1, 0, 1, 0, 0, 0, 1});

TEST(GroupElementTest, IdentityIsDiagonal) {
  EXPECT_EQ(identity(), m({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(identity().determinant(), 1);
  EXPECT_EQ(mul(identity(), kM1), kM1);
}

TEST(GroupElementTest, RejectsBadMatrices) {
  EXPECT_THROW(m({2, 0, 0, 0, 1, 0, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(m({1, 0, 0, 0, 1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(m({-1, 0, 0, 0, 1, 0, 0, 0, 1}), std::invalid_argument);
}

TEST(GroupElementTest, ProductOfFirstTwoGenerators) {
  EXPECT_EQ(mul(kM1, kM2), m({1, 1, 1, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(mul(kM1, inverse(kM1)), identity());
}

TEST(GroupElementTest, InverseOfElementary) {
  EXPECT_EQ(inverse(identity()), identity());
  EXPECT_EQ(inverse(kM1), m({1, -1, 0, 0, 1, 0, 0, 0, 1}));
}

TEST(GroupElementTest, InverseOnRandomWords) {
  const GeneratorSet gens = standard_generators();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement g = identity();
    GroupElement h = identity();
    for (int k = 0; k < 5; ++k) {
      g = g * gens[pick(rng)];
      h = h * gens[pick(rng)];
    }
    EXPECT_EQ(mul(inverse(g), g), identity());
    EXPECT_EQ(inverse(inverse(g)), g);
    EXPECT_EQ(inverse(g * h), inverse(h) * inverse(g));
  }
}

TEST(GroupElementTest, GeneralDimension) {
  const GroupElement e = elementary(4, 0, 3, 5);
  EXPECT_EQ(e.determinant(), 1);
  EXPECT_EQ(e * inverse(e), identity(4));
  EXPECT_NE(identity(4), identity(3));
}

TEST(GeneratorSetTest, StandardGenerators) {
  const GeneratorSet gens = standard_generators();
  ASSERT_EQ(gens.size(), 12u);
  EXPECT_FALSE(gens.contains_self_inverse());
  std::set<GroupElement> distinct(gens.members().begin(), gens.members().end());
  EXPECT_EQ(distinct.size(), 12u);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    EXPECT_FALSE(gens[i].is_identity());
    EXPECT_EQ(gens[gens.inverse_index(i)] * gens[i], identity());
    EXPECT_NE(gens[i] * gens[i], identity());
    if (i > 0) EXPECT_LT(gens[i - 1], gens[i]);
  }
  for (const GroupElement& g : {kM1, kM2, m({1, 0, 0, 0, 1, 1, 0, 0, 1})}) {
    EXPECT_TRUE(distinct.contains(g));
    EXPECT_TRUE(distinct.contains(g.transpose()));
    EXPECT_TRUE(distinct.contains(inverse(g)));
  }
}

TEST(GeneratorSetTest, ValidatesMembers) {
  EXPECT_THROW(GeneratorSet({kM1}), std::invalid_argument);
  EXPECT_THROW(GeneratorSet({identity()}), std::invalid_argument);
  EXPECT_THROW(GeneratorSet({kM1, kM1, inverse(kM1)}), std::invalid_argument);
  EXPECT_NO_THROW(GeneratorSet({kM1, inverse(kM1)}));

  const GroupElement flip = m({-1, 0, 0, 0, -1, 0, 0, 0, 1});
  EXPECT_TRUE(GeneratorSet({flip}).contains_self_inverse());
}

TEST(BallTest, SmallRadii) {
  const GeneratorSet gens = standard_generators();
  const Basis b0 = ball(gens, 0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_EQ(b0[0], identity());
  EXPECT_EQ(ball(gens, 1).size(), 13u);
  EXPECT_EQ(ball(gens, 2).size(), 121u);
  EXPECT_EQ(ball(gens, 3).size(), 883u);
}

TEST(BallTest, RadiusFourRegression) {
  // Frozen from exhaustive enumeration of all 12^4 words.
  const Basis b4 = ball(standard_generators(), 4);
  EXPECT_EQ(b4.size(), 5455u);
  for (const GroupElement& g : b4.elements()) EXPECT_EQ(g.determinant(), 1);
}

TEST(BallTest, WitnessesAndCanonicalOrder) {
  const GeneratorSet gens = standard_generators();
  const Basis b = ball(gens, 3);
  EXPECT_EQ(b[0], identity());
  for (std::size_t i = 0; i < b.size(); ++i) {
    GroupElement w = identity();
    for (std::size_t s : b.witness(i)) w = w * gens[s];
    EXPECT_EQ(w, b[i]);
    EXPECT_LE(b.word_length(i), 3u);
    EXPECT_EQ(b.index_of(b[i]), i);
    if (i > 0) {
      const bool same_len = b.word_length(i - 1) == b.word_length(i);
      EXPECT_TRUE(b.word_length(i - 1) < b.word_length(i) ||
                  (same_len && b[i - 1] < b[i]));
    }
  }
}

TEST(BallTest, NestedPrefixes) {
  const GeneratorSet gens = standard_generators();
  const Basis b2 = ball(gens, 2);
  const Basis b3 = ball(gens, 3);
  for (std::size_t i = 0; i < b2.size(); ++i) EXPECT_EQ(b2[i], b3[i]);
}

TEST(BallTest, DoubleBallContainsQuotients) {
  const GeneratorSet gens = standard_generators();
  const Basis b1 = ball(gens, 1);
  const Basis b2 = ball(gens, 2);
  for (const GroupElement& a : b1.elements())
    for (const GroupElement& c : b1.elements())
      EXPECT_TRUE(b2.contains(inverse(a) * c));
}

}  // namespace
}  // namespace gramcert
