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

#include "gramcert/certify.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gramcert {
namespace {

Eigen::MatrixXd qtq(const Eigen::MatrixXd& q) { return q.transpose() * q; }

TEST(SqrtFactorTest, Identity) {
  const SymMatrix p(Eigen::MatrixXd::Identity(5, 5));
  EXPECT_LE((qtq(sqrt_factor(p)) - p.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SqrtFactorTest, SingularDiagonal) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 4;
  const Eigen::MatrixXd q = sqrt_factor(SymMatrix(d));
  EXPECT_LE((qtq(q) - d).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SqrtFactorTest, RandomPsd) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXd b(30, 12);
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = g(rng);
    const SymMatrix p(b * b.transpose());
    EXPECT_LE((qtq(sqrt_factor(p)) - p.matrix()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SqrtFactorTest, TolerancesOnNegativeEigenvalues) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Identity(2, 2);
  d(1, 1) = -1e-8;
  EXPECT_NO_THROW(sqrt_factor(SymMatrix(d)));
  d(1, 1) = -1e-3;
  EXPECT_THROW(sqrt_factor(SymMatrix(d)), std::domain_error);
}

TEST(RoundAndFixTest, Examples) {
  EXPECT_EQ(round_and_fix(Eigen::MatrixXd::Zero(3, 3), 1000000),
            DenseMatrix<mpz_class>(3, 3));
  Eigen::MatrixXd row(1, 2);
  row << 0.3, -0.3;
  const DenseMatrix<mpz_class> q = round_and_fix(row, 10);
  EXPECT_EQ(q(0, 0), 3);
  EXPECT_EQ(q(0, 1), -3);
  EXPECT_THROW(round_and_fix(row, 0), std::invalid_argument);
}

TEST(RoundAndFixTest, RowsAlwaysSumToZero) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd qf(17, 17);
  for (Eigen::Index i = 0; i < qf.size(); ++i) qf.data()[i] = u(rng);
  const DenseMatrix<mpz_class> q = round_and_fix(qf, 1000000);
  for (std::size_t i = 0; i < 17; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < 17; ++j) s += q(i, j);
    EXPECT_EQ(s, 0);
    for (std::size_t j = 1; j < 17; ++j) {
      EXPECT_LE(abs(q(i, j) - mpz_class(std::lround(1e6 * qf(i, j)))), 0);
    }
  }
}

TEST(GramProductTest, ZeroRowSumsGiveZeroTotal) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> v(-1000, 1000);
  DenseMatrix<mpz_class> q(9, 9);
  for (std::size_t i = 0; i < 9; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 1; j < 9; ++j) {
      q(i, j) = v(rng);
      s += q(i, j);
    }
    q(i, 0) = -s;
  }
  const DenseMatrix<mpz_class> g = gram_product(q);
  mpz_class total = 0;
  for (const mpz_class& x : g.data()) total += x;
  EXPECT_EQ(total, 0);
  EXPECT_EQ(g, [&] {
    DenseMatrix<mpz_class> t(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j)
        for (std::size_t k = 0; k < 9; ++k) t(i, j) += q(k, i) * q(k, j);
    return t;
  }());
}

TEST(LemmaTest, Constants) {
  EXPECT_EQ(support_exponent(1), 1u);
  EXPECT_EQ(support_exponent(2), 2u);
  EXPECT_EQ(support_exponent(3), 3u);
  EXPECT_EQ(support_exponent(4), 3u);
  EXPECT_EQ(lemma_constant(2, false), 4);
  EXPECT_EQ(lemma_constant(2, true), 8);
  EXPECT_EQ(lemma_constant(0, false), Rational(1, 4));
  EXPECT_EQ(lemma_bound(2, Rational(9, 400), false), Rational(9, 100));
  EXPECT_EQ(lemma_bound(2, Rational(9, 400), true), Rational(9, 50));
  EXPECT_EQ(lemma_bound(2, 0, false), 0);
  EXPECT_THROW(lemma_bound(2, -1, false), std::invalid_argument);
}

TEST(LemmaTest, HeadlineArithmetic) {
  const Rational eps(561, 2000);
  const Rational certified = eps - lemma_bound(2, Rational(9, 400), false);
  EXPECT_EQ(certified, Rational(381, 2000));
  EXPECT_GE(certified, Rational(1, 6));
  EXPECT_EQ(Rational(1, 6) / 12, Rational(1, 72));
}

class CertifyTest : public ::testing::Test {
 protected:
  CertifyTest() : gens_(standard_generators()), b1_(ball(gens_, 1)) {}

  Certificate empty_certificate(std::size_t radius, const Basis& basis) const {
    Certificate c;
    c.m = basis.size();
    c.radius = radius;
    c.eps = 0;
    c.denominator = 1;
    c.generators = gens_.members();
    c.q = DenseMatrix<mpz_class>(c.m, c.m);
    return c;
  }

  // Q has a single nonzero row holding the coefficients of Delta, so
  // Q^T Q evaluates to Delta^2 exactly.
  Certificate exact_certificate() const {
    Certificate c = empty_certificate(1, b1_);
    const QElement delta = laplacian<Rational>(gens_);
    for (std::size_t j = 0; j < c.m; ++j) {
      c.q(0, j) = delta.coefficient(b1_[j]).get_num();
    }
    return c;
  }

  GeneratorSet gens_;
  Basis b1_;
};

TEST_F(CertifyTest, ZeroCertificateFails) {
  const Basis b2 = ball(gens_, 2);
  const VerificationReport r = verify(empty_certificate(2, b2), gens_);
  EXPECT_EQ(r.l1_residual, 576);
  EXPECT_EQ(r.d, 2u);
  EXPECT_EQ(r.lemma_constant, 4);
  EXPECT_EQ(r.eps_certified, -2304);
  EXPECT_FALSE(r.pass);
}

TEST_F(CertifyTest, SyntheticExactCertificate) {
  const Certificate c = exact_certificate();
  const VerificationReport r = verify(c, gens_, 0);
  EXPECT_EQ(r.l1_residual, 0);
  EXPECT_EQ(r.eps_certified, 0);
  EXPECT_EQ(r.d, 1u);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(verify(c, gens_, Rational(1, 6)).pass);
  EXPECT_EQ(verify(c), verify(c, gens_));
}

TEST_F(CertifyTest, PassFlagMatchesThreshold) {
  Certificate c = exact_certificate();
  c.denominator = 2;
  c.eps = Rational(1, 2);
  // Now P = Delta Delta^T / 4 so c = Delta^2 - Delta/2 - Delta^2/4.
  const VerificationReport r = verify(c, gens_, Rational(-1000));
  EXPECT_EQ(r.pass, r.eps_certified >= r.threshold);
  EXPECT_EQ(r.normalized_gap, r.eps_certified / 12);
  EXPECT_EQ(r.correction, r.lemma_constant * r.l1_residual);
}

TEST_F(CertifyTest, PerturbationIsDetected) {
  Certificate c = exact_certificate();
  const Rational before = verify(c, gens_, 0).l1_residual;
  c.q(3, 1) += 1;
  c.q(3, 2) -= 1;
  const VerificationReport after = verify(c, gens_, 0);
  EXPECT_NE(after.l1_residual, before);
  EXPECT_FALSE(after.pass);
}

TEST_F(CertifyTest, MalformedCertificates) {
  using Kind = CertificateError::Kind;
  auto kind_of = [&](const Certificate& c) {
    try {
      verify(c, gens_);
    } catch (const CertificateError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return Kind::kDimension;
  };
  Certificate row = exact_certificate();
  row.q(0, 0) += 1;
  EXPECT_EQ(kind_of(row), Kind::kRowSum);

  Certificate dim = exact_certificate();
  dim.m = 12;
  EXPECT_EQ(kind_of(dim), Kind::kDimension);

  Certificate shape = exact_certificate();
  shape.q = DenseMatrix<mpz_class>(13, 12);
  EXPECT_EQ(kind_of(shape), Kind::kDimension);

  Certificate gens = exact_certificate();
  std::swap(gens.generators[0], gens.generators[1]);
  EXPECT_EQ(kind_of(gens), Kind::kGenerators);

  Certificate broken = exact_certificate();
  broken.generators.pop_back();
  EXPECT_THROW(verify(broken), CertificateError);
}

TEST_F(CertifyTest, MakeCertificateRoundTrip) {
  const Certificate exact = exact_certificate();
  Eigen::MatrixXd p(exact.m, exact.m);
  for (std::size_t i = 0; i < exact.m; ++i) {
    for (std::size_t j = 0; j < exact.m; ++j) {
      p(i, j) = exact.q(0, i).get_d() * exact.q(0, j).get_d();
    }
  }
  const Certificate c = make_certificate(SymMatrix(p), b1_, 0, 1000000);
  EXPECT_EQ(c.m, 13u);
  EXPECT_EQ(c.radius, 1u);
  const VerificationReport r = verify(c, gens_, 0);
  EXPECT_LT(r.l1_residual, Rational(1, 10000));
  EXPECT_THROW(make_certificate(SymMatrix(3), b1_, 0, 10),
               std::invalid_argument);
}

}  // namespace
}  // namespace gramcert
