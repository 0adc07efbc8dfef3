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

#include "gramcert/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gramcert {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd s = m + m.transpose();
  s *= 0.5;
  return s;
}

void project_affine_in_place(Eigen::MatrixXd& m, const ConstraintSystem& cs) {
  double* data = m.data();
  for (const Constraint& c : cs.classes()) {
    double sum = 0.0;
    for (std::uint32_t flat : c.members) sum += data[flat];
    const double shift =
        (c.rhs_value - sum) / static_cast<double>(c.members.size());
    for (std::uint32_t flat : c.members) data[flat] += shift;
  }
}

}  // namespace

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("SymMatrix: matrix is not square");
  }
  m_ = symmetrized(m);
}

SymMatrix SymMatrix::from_symmetric(Eigen::MatrixXd m) {
  SymMatrix s;
  s.m_ = symmetrized(m);
  return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

double SymMatrix::min_eigenvalue() const {
  if (dim() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("min_eigenvalue: eigensolver did not converge");
  }
  return es.eigenvalues()(0);
}

DenseMatrix<double> SymMatrix::to_dense() const {
  DenseMatrix<double> d(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) d(i, j) = m_(i, j);
  }
  return d;
}

void SolverConfig::validate() const {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (lbfgs_memory < 1) {
    throw std::invalid_argument("lbfgs_memory must be >= 1");
  }
  if (check_interval < 1) {
    throw std::invalid_argument("check_interval must be >= 1");
  }
  if (bisection_resolution <= 0 || bisection_hi < bisection_lo) {
    throw std::invalid_argument("invalid bisection window");
  }
}

SymMatrix project_psd(const SymMatrix& m, double floor) {
  if (m.dim() == 0) return m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.matrix());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("project_psd: eigensolver did not converge");
  }
  Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(floor);
  const Eigen::MatrixXd& v = es.eigenvectors();
  return SymMatrix::from_symmetric(v * lambda.asDiagonal() * v.transpose());
}

SymMatrix project_affine(const SymMatrix& m, const ConstraintSystem& cs) {
  if (m.dim() != cs.dim()) {
    throw std::invalid_argument("project_affine: dimension mismatch");
  }
  Eigen::MatrixXd x = m.matrix();
  project_affine_in_place(x, cs);
  return SymMatrix::from_symmetric(std::move(x));
}

double affine_residual(const SymMatrix& m, const ConstraintSystem& cs) {
  const double* data = m.matrix().data();
  double worst = 0.0;
  for (const Constraint& c : cs.classes()) {
    double sum = 0.0;
    for (std::uint32_t flat : c.members) sum += data[flat];
    worst = std::max(worst, std::abs(c.rhs_value - sum));
  }
  return worst;
}

namespace {

// Keeps the iterate with the smallest combined residual.
struct BestIterate {
  SymMatrix p;
  double affine = 0.0;
  double psd = 0.0;
  long iteration = 0;
  bool set = false;

  void offer(const SymMatrix& x, double a, double q, long it) {
    if (!set || std::max(a, q) < std::max(affine, psd)) {
      p = x;
      affine = a;
      psd = q;
      iteration = it;
      set = true;
    }
  }
};

SolveReport solve_dykstra(const ConstraintSystem& cs, const SolverConfig& config,
                          std::ostream* log) {
  const std::size_t m = cs.dim();
  SolveReport report;
  BestIterate best;
  SymMatrix x = project_affine(SymMatrix(m), cs);
  Eigen::MatrixXd correction = Eigen::MatrixXd::Zero(m, m);

  auto measure = [&](long iteration) {
    const double a = affine_residual(x, cs);
    const double q = std::max(0.0, -x.min_eigenvalue());
    if (log) *log << iteration << ',' << a << ',' << q << '\n';
    best.offer(x, a, q, iteration);
    report.iterations = iteration;
    return std::max(a, q) <= config.tolerance;
  };

  bool converged = measure(0);
  for (long it = 1; !converged && it <= config.max_iterations; ++it) {
    const SymMatrix shifted =
        SymMatrix::from_symmetric(x.matrix() + correction);
    const SymMatrix y = project_psd(shifted, config.psd_floor);
    correction = shifted.matrix() - y.matrix();
    x = project_affine(y, cs);
    if (it % config.check_interval == 0 || it == config.max_iterations) {
      converged = measure(it);
    }
  }
  report.p = best.p;
  report.affine_residual = best.affine;
  report.psd_residual = best.psd;
  report.converged = converged;
  return report;
}

// Dual of min ||X||^2 / 2 over {X PSD, A(X) = b}:
//   theta(y) = ||P_psd(A*(y))||^2 / 2 - b.y,  grad = A(P_psd(A*(y))) - b.
// X is parametrised as V R V^T with V an orthonormal basis of the face.
class DualObjective {
 public:
  explicit DualObjective(const ConstraintSystem& cs) : m_(cs.dim()) {
    const std::size_t k = cs.classes().size();
    rhs_.resize(k);
    weight_.resize(k);
    class_of_.assign(m_ * m_, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const Constraint& con = cs.classes()[c];
      rhs_[c] = con.rhs_value;
      weight_[c] = static_cast<double>(con.members.size());
      for (std::uint32_t flat : con.members) class_of_[flat] = c;
      total += con.rhs;
    }
    const Eigen::Index n = static_cast<Eigen::Index>(m_);
    if (total == 0 && m_ > 1) {
      // Sum of all entries is forced to zero, so PSD solutions satisfy P1 = 0.
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(Eigen::VectorXd::Ones(n));
      Eigen::MatrixXd q = qr.householderQ();
      face_ = q.rightCols(n - 1);
    } else {
      face_ = Eigen::MatrixXd::Identity(n, n);
    }
  }

  std::size_t size() const { return rhs_.size(); }
  const Eigen::VectorXd& weight() const { return weight_; }

  /// Returns theta(y); fills the gradient and the primal matrix.
  double evaluate(const Eigen::VectorXd& y, Eigen::VectorXd& grad,
                  Eigen::MatrixXd& primal) const {
    const Eigen::Index n = static_cast<Eigen::Index>(m_);
    Eigen::MatrixXd s(n, n);
    for (std::size_t f = 0; f < m_ * m_; ++f) s.data()[f] = y[class_of_[f]];
    s = 0.5 * (s + s.transpose()).eval();
    const Eigen::MatrixXd r = face_.transpose() * s * face_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("solve_feasibility: eigensolver failed");
    }
    const Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXd w = face_ * es.eigenvectors();
    primal = w * lambda.asDiagonal() * w.transpose();
    primal = 0.5 * (primal + primal.transpose()).eval();
    grad = -rhs_;
    for (std::size_t f = 0; f < m_ * m_; ++f) {
      grad[class_of_[f]] += primal.data()[f];
    }
    return 0.5 * lambda.squaredNorm() - rhs_.dot(y);
  }

 private:
  std::size_t m_;
  Eigen::VectorXd rhs_;
  Eigen::VectorXd weight_;
  std::vector<std::size_t> class_of_;
  Eigen::MatrixXd face_;
};

SolveReport solve_dual_lbfgs(const ConstraintSystem& cs,
                             const SolverConfig& config, std::ostream* log) {
  const DualObjective dual(cs);
  const Eigen::Index k = static_cast<Eigen::Index>(dual.size());
  SolveReport report;
  BestIterate best;

  Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd grad(k);
  Eigen::MatrixXd primal;
  double f = dual.evaluate(y, grad, primal);

  std::deque<Eigen::VectorXd> s_hist;
  std::deque<Eigen::VectorXd> y_hist;
  const double blowup = 1e12 * (1.0 + std::abs(f));

  auto measure = [&](long iteration, const Eigen::MatrixXd& x) {
    const SymMatrix p = SymMatrix::from_symmetric(x);
    const double a = affine_residual(p, cs);
    const double q = std::max(0.0, -p.min_eigenvalue());
    if (log) *log << iteration << ',' << a << ',' << q << '\n';
    best.offer(p, a, q, iteration);
    report.iterations = iteration;
    return std::max(a, q) <= config.tolerance;
  };

  bool converged = measure(0, primal);
  for (long it = 1; !converged && it <= config.max_iterations; ++it) {
    // Two-loop recursion; the initial inverse Hessian is diag(1 / |class|),
    // the exact inverse of A A^*.
    Eigen::VectorXd q = grad;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      alpha[i] = s_hist[i].dot(q) / y_hist[i].dot(s_hist[i]);
      q -= alpha[i] * y_hist[i];
    }
    Eigen::VectorXd dir = q.cwiseQuotient(dual.weight());
    if (!s_hist.empty()) {
      const Eigen::VectorXd& yl = y_hist.back();
      dir *= s_hist.back().dot(yl) / yl.dot(yl.cwiseQuotient(dual.weight()));
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = y_hist[i].dot(dir) / y_hist[i].dot(s_hist[i]);
      dir += s_hist[i] * (alpha[i] - beta);
    }
    dir = -dir;
    double slope = grad.dot(dir);
    if (!(slope < 0)) {
      dir = -grad.cwiseQuotient(dual.weight());
      slope = grad.dot(dir);
      s_hist.clear();
      y_hist.clear();
    }

    // theta is convex, so its directional derivative is monotone: bisect on
    // it until the approximate Wolfe conditions hold.
    double step = 1.0, lo = 0.0, hi = std::numeric_limits<double>::infinity();
    Eigen::VectorXd y_next, grad_next(k);
    Eigen::MatrixXd primal_next;
    double f_next = f;
    for (int ls = 0; ls < 60; ++ls) {
      y_next = y + step * dir;
      f_next = dual.evaluate(y_next, grad_next, primal_next);
      const double d = grad_next.dot(dir);
      if (d < 0.9 * slope && f_next <= f) {
        lo = step;
        step = std::isinf(hi) ? 2.0 * step : 0.5 * (lo + hi);
      } else if (d > -0.8 * slope || f_next > f + 1e-12 * std::abs(f)) {
        hi = step;
        step = 0.5 * (lo + hi);
      } else {
        break;
      }
    }

    const Eigen::VectorXd sv = y_next - y;
    const Eigen::VectorXd yv = grad_next - grad;
    if (sv.dot(yv) > 1e-16 * sv.norm() * yv.norm()) {
      s_hist.push_back(sv);
      y_hist.push_back(yv);
      if (static_cast<int>(s_hist.size()) > config.lbfgs_memory) {
        s_hist.pop_front();
        y_hist.pop_front();
      }
    }
    y = std::move(y_next);
    grad = std::move(grad_next);
    primal = std::move(primal_next);
    f = f_next;

    if (!std::isfinite(f) || f < -blowup) {
      report.infeasibility_detected = true;
      measure(it, primal);
      break;
    }
    if (it % config.check_interval == 0 || it == config.max_iterations ||
        grad.lpNorm<Eigen::Infinity>() <= config.tolerance) {
      converged = measure(it, primal);
    }
  }
  report.p = best.p;
  report.affine_residual = best.affine;
  report.psd_residual = best.psd;
  report.converged = converged;
  return report;
}

}  // namespace

SolveReport solve_feasibility(const ConstraintSystem& cs,
                              const SolverConfig& config, std::ostream* log) {
  config.validate();
  SolveReport report = config.method == SolverMethod::kDykstra
                           ? solve_dykstra(cs, config, log)
                           : solve_dual_lbfgs(cs, config, log);
  const std::size_t m = cs.dim();
  if (report.converged && config.final_floor != 0.0 && m > 0) {
    const double floor =
        config.final_floor > 0
            ? config.final_floor
            : 1e-6 * report.p.matrix().trace() / static_cast<double>(m);
    const SymMatrix pushed = project_affine(project_psd(report.p, floor), cs);
    const double a = affine_residual(pushed, cs);
    const double q = std::max(0.0, -pushed.min_eigenvalue());
    if (std::max(a, q) <= config.tolerance) {
      report.p = pushed;
      report.affine_residual = a;
      report.psd_residual = q;
    }
  }
  return report;
}

std::pair<Rational, SolveReport> max_eps_bisection(const GeneratorSet& gens,
                                                   const Basis& basis,
                                                   const SolverConfig& config,
                                                   std::ostream* log) {
  config.validate();
  const auto table =
      std::make_shared<const ProductTable>(build_product_table(basis));
  auto solve_at = [&](const Rational& eps) {
    return solve_feasibility(assemble(table, target(eps, gens)), config, log);
  };

  Rational lo = config.bisection_lo;
  Rational hi = config.bisection_hi;
  std::optional<SolveReport> best;

  SolveReport top = solve_at(hi);
  if (top.converged) return {hi, std::move(top)};

  while (hi - lo > config.bisection_resolution) {
    Rational mid = (lo + hi) / 2;
    SolveReport r = solve_at(mid);
    if (r.converged) {
      lo = mid;
      best = std::move(r);
    } else {
      hi = mid;
    }
  }
  if (!best) best = solve_at(lo);
  return {lo, std::move(*best)};
}

}  // namespace gramcert
