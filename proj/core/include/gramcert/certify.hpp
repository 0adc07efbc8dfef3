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

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramcert/gram_assembly.hpp"
#include "gramcert/group_ring.hpp"
#include "gramcert/matrix_group.hpp"
#include "gramcert/sdp.hpp"

namespace gramcert {

/// Exact sum-of-squares certificate: P = Q^T Q / D^2 is a Gram matrix over
/// ball(radius) of the generators, for the target Delta^2 - eps * Delta.
struct Certificate {
  std::size_t m = 0;
  mpz_class denominator = 1;
  Rational eps = 0;
  std::size_t radius = 0;
  /// In the canonical order of the generating set.
  std::vector<GroupElement> generators;
  DenseMatrix<mpz_class> q;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Exact outcome of checking a certificate. Contains no floating-point data.
struct VerificationReport {
  Rational eps;
  Rational l1_residual;
  unsigned d = 0;
  Rational lemma_constant;
  Rational correction;
  Rational eps_certified;
  Rational normalized_gap;
  Rational threshold;
  std::size_t generator_count = 0;
  bool pass = false;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

class CertificateError : public std::runtime_error {
 public:
  enum class Kind {
    kRowSum,
    kDimension,
    kSupport,
    kGenerators,
    kNotInAugmentationIdeal,
  };
  CertificateError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Symmetric square root V diag(sqrt(max(lambda, 0))) V^T, so Qf^T Qf = P.
/// Throws std::domain_error if P has an eigenvalue below -1e-6.
Eigen::MatrixXd sqrt_factor(const SymMatrix& p);

/// Rounds D * Qf entrywise to the nearest integer, then moves each row's
/// sum into column 0 (the identity element) so every row sums to zero.
DenseMatrix<mpz_class> round_and_fix(const Eigen::MatrixXd& qf,
                                     const mpz_class& denominator);

/// Exact integer Gram product Q^T Q.
DenseMatrix<mpz_class> gram_product(const DenseMatrix<mpz_class>& q);

/// Smallest d with 2^d >= 2 * radius: every a_i^{-1} a_j is then a product of
/// at most 2^d generators.
unsigned support_exponent(std::size_t radius);

/// 2^(2d-1), or 2^(2d-2) when no generator is its own inverse.
Rational lemma_constant(unsigned d, bool has_self_inverse);

/// lemma_constant(d, has_self_inverse) * l1: adding this multiple of Delta to
/// a hermitian augmentation-zero c supported on words of length <= 2^d makes
/// it a sum of squares.
Rational lemma_bound(unsigned d, const Rational& l1, bool has_self_inverse);

/// The exact residual c = (Delta^2 - eps Delta) - sum_ij P_ij a_i^{-1} a_j.
QElement certificate_residual(const Certificate& cert, const GeneratorSet& gens,
                              const ProductTable& table);

/// Checks the certificate in exact arithmetic. Throws CertificateError for a
/// malformed certificate.
VerificationReport verify(const Certificate& cert, const GeneratorSet& gens,
                          const Rational& threshold = Rational(1, 6));
/// Uses the generating set stored in the certificate.
VerificationReport verify(const Certificate& cert,
                          const Rational& threshold = Rational(1, 6));

/// Rounds a numeric Gram matrix into a certificate for `basis`.
Certificate make_certificate(const SymMatrix& p, const Basis& basis,
                             const Rational& eps,
                             const mpz_class& denominator);

}  // namespace gramcert
