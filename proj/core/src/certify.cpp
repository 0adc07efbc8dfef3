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

#include <cmath>
#include <limits>

namespace gramcert {

Eigen::MatrixXd sqrt_factor(const SymMatrix& p) {
  if (p.dim() == 0) return Eigen::MatrixXd(0, 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.matrix());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("sqrt_factor: eigensolver did not converge");
  }
  const double min_eig = es.eigenvalues()(0);
  if (min_eig < -1e-6) {
    throw std::domain_error("sqrt_factor: matrix has eigenvalue " +
                            std::to_string(min_eig) +
                            ", too far from PSD to certify");
  }
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXd& v = es.eigenvectors();
  Eigen::MatrixXd r = v * root.asDiagonal() * v.transpose();
  return 0.5 * (r + r.transpose());
}

DenseMatrix<mpz_class> round_and_fix(const Eigen::MatrixXd& qf,
                                     const mpz_class& denominator) {
  if (denominator < 1) {
    throw std::invalid_argument("round_and_fix: denominator must be >= 1");
  }
  const double scale = denominator.get_d();
  const auto rows = static_cast<std::size_t>(qf.rows());
  const auto cols = static_cast<std::size_t>(qf.cols());
  DenseMatrix<mpz_class> q(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class row_sum = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = std::round(scale * qf(i, j));
      if (!std::isfinite(v) || std::abs(v) > 0x1p62) {
        throw std::overflow_error("round_and_fix: entry out of range");
      }
      q(i, j) = mpz_class(static_cast<long>(v));
      row_sum += q(i, j);
    }
    if (cols > 0) q(i, 0) -= row_sum;
  }
  return q;
}

DenseMatrix<mpz_class> gram_product(const DenseMatrix<mpz_class>& q) {
  const std::size_t n = q.cols();
  DenseMatrix<mpz_class> g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < q.rows(); ++k) {
        mpz_addmul(s.get_mpz_t(), q(k, i).get_mpz_t(), q(k, j).get_mpz_t());
      }
      g(j, i) = s;
      g(i, j) = std::move(s);
    }
  }
  return g;
}

unsigned support_exponent(std::size_t radius) {
  unsigned d = 0;
  while ((std::size_t{1} << d) < 2 * radius) ++d;
  return d;
}

Rational lemma_constant(unsigned d, bool has_self_inverse) {
  const long exponent = 2L * d - (has_self_inverse ? 1 : 2);
  Rational c = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(c.get_num_mpz_t(), c.get_num_mpz_t(),
                 static_cast<unsigned long>(exponent));
  } else {
    mpz_mul_2exp(c.get_den_mpz_t(), c.get_den_mpz_t(),
                 static_cast<unsigned long>(-exponent));
  }
  c.canonicalize();
  return c;
}

Rational lemma_bound(unsigned d, const Rational& l1, bool has_self_inverse) {
  if (l1 < 0) throw std::invalid_argument("lemma_bound: l1 must be >= 0");
  return lemma_constant(d, has_self_inverse) * l1;
}

namespace {

void check_shape(const Certificate& cert, const GeneratorSet& gens,
                 const Basis& basis) {
  using Kind = CertificateError::Kind;
  if (cert.generators != gens.members()) {
    throw CertificateError(Kind::kGenerators,
                           "certificate generators differ from the "
                           "generating set being verified");
  }
  if (cert.m != basis.size()) {
    throw CertificateError(
        Kind::kDimension, "certificate has m=" + std::to_string(cert.m) +
                              " but ball(" + std::to_string(cert.radius) +
                              ") has " + std::to_string(basis.size()) +
                              " elements");
  }
  if (cert.q.rows() != cert.m || cert.q.cols() != cert.m) {
    throw CertificateError(Kind::kDimension,
                           "matrix is " + std::to_string(cert.q.rows()) + "x" +
                               std::to_string(cert.q.cols()) + ", expected " +
                               std::to_string(cert.m) + "x" +
                               std::to_string(cert.m));
  }
  if (cert.denominator < 1) {
    throw CertificateError(Kind::kDimension, "denominator must be positive");
  }
  if (cert.eps < 0) {
    throw CertificateError(Kind::kDimension, "eps must be nonnegative");
  }
  for (std::size_t i = 0; i < cert.m; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < cert.m; ++j) s += cert.q(i, j);
    if (s != 0) {
      throw CertificateError(Kind::kRowSum, "row " + std::to_string(i) +
                                                " of Q sums to " + s.get_str());
    }
  }
}

}  // namespace

QElement certificate_residual(const Certificate& cert, const GeneratorSet& gens,
                              const ProductTable& table) {
  check_shape(cert, gens, table.basis());
  const DenseMatrix<mpz_class> g = gram_product(cert.q);
  const mpz_class d2 = cert.denominator * cert.denominator;

  QElement b;
  const auto& classes = table.class_members();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) continue;
    mpz_class sum = 0;
    for (std::uint32_t flat : classes[k]) sum += g.data()[flat];
    Rational coeff(sum, d2);
    coeff.canonicalize();
    b.add_term(table.double_ball()[k], coeff);
  }
  if (augmentation(b) != 0) {
    throw CertificateError(CertificateError::Kind::kNotInAugmentationIdeal,
                           "Gram evaluation is not in the augmentation ideal");
  }
  return target(cert.eps, gens) - b;
}

VerificationReport verify(const Certificate& cert, const GeneratorSet& gens,
                          const Rational& threshold) {
  const Basis basis = ball(gens, cert.radius);
  check_shape(cert, gens, basis);
  const ProductTable table = build_product_table(basis);
  const QElement c = certificate_residual(cert, gens, table);

  if (augmentation(c) != 0 || !is_hermitian(c)) {
    throw CertificateError(CertificateError::Kind::kNotInAugmentationIdeal,
                           "residual is not a hermitian element of the "
                           "augmentation ideal");
  }
  for (const auto& [g, coeff] : c.terms()) {
    if (!table.double_ball().contains(g)) {
      throw CertificateError(CertificateError::Kind::kSupport,
                             "residual support element " + g.to_string() +
                                 " is outside ball(" +
                                 std::to_string(2 * cert.radius) + ")");
    }
  }

  VerificationReport r;
  r.eps = cert.eps;
  r.l1_residual = l1_norm(c);
  r.d = support_exponent(cert.radius);
  r.lemma_constant = lemma_constant(r.d, gens.contains_self_inverse());
  r.correction = r.lemma_constant * r.l1_residual;
  r.eps_certified = cert.eps - r.correction;
  r.generator_count = gens.size();
  r.normalized_gap = r.eps_certified / Rational(static_cast<long>(gens.size()));
  r.threshold = threshold;
  r.pass = r.eps_certified >= threshold;
  return r;
}

VerificationReport verify(const Certificate& cert, const Rational& threshold) {
  GeneratorSet gens = [&] {
    try {
      return GeneratorSet(cert.generators);
    } catch (const std::invalid_argument& e) {
      throw CertificateError(CertificateError::Kind::kGenerators, e.what());
    }
  }();
  return verify(cert, gens, threshold);
}

Certificate make_certificate(const SymMatrix& p, const Basis& basis,
                             const Rational& eps,
                             const mpz_class& denominator) {
  if (p.dim() != basis.size()) {
    throw std::invalid_argument("make_certificate: dimension mismatch");
  }
  Certificate cert;
  cert.m = basis.size();
  cert.denominator = denominator;
  cert.eps = eps;
  cert.radius = basis.radius();
  cert.generators = basis.generators().members();
  cert.q = round_and_fix(sqrt_factor(p), denominator);
  return cert;
}

}  // namespace gramcert
