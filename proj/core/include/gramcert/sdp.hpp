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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>

#include "gramcert/gram_assembly.hpp"

namespace gramcert {

/// Dense symmetric matrix of doubles. Every mutating entry point
/// re-symmetrizes, so the stored matrix is always exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {}
  /// Stores (M + M^T) / 2.
  explicit SymMatrix(const Eigen::MatrixXd& m);

  static SymMatrix from_symmetric(Eigen::MatrixXd m);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v);
  const Eigen::MatrixXd& matrix() const { return m_; }

  double min_eigenvalue() const;
  DenseMatrix<double> to_dense() const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  Eigen::MatrixXd m_;
};

enum class SolverMethod {
  /// Dykstra alternating projections, one eigendecomposition per sweep.
  kDykstra,
  /// L-BFGS on the dual of the same projection problem (the objective that
  /// Dykstra ascends block-wise), restricted to the face P * 1 = 0 when the
  /// right-hand sides sum to zero.
  kDualLbfgs,
};

struct SolverConfig {
  SolverMethod method = SolverMethod::kDualLbfgs;
  double tolerance = 1e-9;
  long max_iterations = 200000;
  double psd_floor = 0.0;
  /// Eigenvalue floor for the post-convergence interior sweep. Negative
  /// selects 1e-6 * trace / m; zero disables the sweep.
  double final_floor = -1.0;
  /// Residuals are evaluated (and logged) every `check_interval` iterations.
  long check_interval = 10;
  /// Correction pairs kept by the L-BFGS method.
  int lbfgs_memory = 20;

  Rational bisection_lo = 0;
  Rational bisection_hi = Rational(561, 2000);
  Rational bisection_resolution = Rational(1, 1000);

  void validate() const;
};

struct SolveReport {
  SymMatrix p;
  long iterations = 0;
  double affine_residual = 0.0;
  double psd_residual = 0.0;
  bool converged = false;
  /// Set when the dual method observed an unbounded dual objective, which
  /// indicates the constraint system has no PSD solution.
  bool infeasibility_detected = false;

  double combined_residual() const {
    return std::max(affine_residual, psd_residual);
  }
};

/// Nearest matrix (in Frobenius norm, for floor = 0) whose eigenvalues are all
/// at least `floor`. Throws std::runtime_error if the eigensolver fails.
SymMatrix project_psd(const SymMatrix& m, double floor = 0.0);

/// Exact Euclidean projection onto {P : every class sums to its rhs}: each
/// member of a class receives deficit / |class|.
SymMatrix project_affine(const SymMatrix& m, const ConstraintSystem& cs);

/// Largest |rhs - class sum| over all classes.
double affine_residual(const SymMatrix& m, const ConstraintSystem& cs);

/// Finds a PSD matrix satisfying `cs` with the configured method. The
/// returned matrix is the best iterate seen (smallest combined residual).
/// Non-convergence is reported, not thrown. When `log` is non-null, writes
/// "iteration,affine_residual,psd_residual" CSV lines.
SolveReport solve_feasibility(const ConstraintSystem& cs,
                              const SolverConfig& config,
                              std::ostream* log = nullptr);

/// Bisects eps over [bisection_lo, bisection_hi] down to the configured
/// resolution and returns the largest eps whose feasibility solve converged,
/// with its report.
std::pair<Rational, SolveReport> max_eps_bisection(const GeneratorSet& gens,
                                                   const Basis& basis,
                                                   const SolverConfig& config,
                                                   std::ostream* log = nullptr);

}  // namespace gramcert
