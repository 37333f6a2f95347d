// Copyright 2026 The eulersim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linear_programming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eulersim/errors.hpp"

namespace eulersim::detail {

namespace {

class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(A.rows()), n_(A.cols()), t_(A.rows() + 1, A.cols() + A.rows() + 1) {
    t_.setZero();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double sign = b(i) < 0 ? -1.0 : 1.0;
      t_.row(i).head(n_) = sign * A.row(i);
      t_(i, n_ + i) = 1.0;
      t_(i, rhs()) = sign * b(i);
      basis_.push_back(n_ + i);
    }
    active_.assign(static_cast<std::size_t>(m_), true);
  }

  Eigen::Index rhs() const { return t_.cols() - 1; }
  Eigen::Index obj() const { return m_; }

  void set_costs(const Eigen::VectorXd& cost) {
    t_.row(obj()).setZero();
    t_.row(obj()).head(cost.size()) = cost.transpose();
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Eigen::Index bcol = basis_[i];
      const double cb = bcol < cost.size() ? cost(bcol) : 0.0;
      if (cb != 0.0) t_.row(obj()) -= cb * t_.row(i);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    t_.row(r) /= t_(r, c);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[r] = c;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool optimize(Eigen::Index limit, double tol) {
    for (int iter = 0; iter < 100000; ++iter) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < limit; ++j) {
        if (t_(obj(), j) < -tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (!active_[i] || t_(i, enter) <= tol) continue;
        const double ratio = t_(i, rhs()) / t_(i, enter);
        if (ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw ConvergenceError("simplex iteration limit reached");
  }

  // Pivots artificial variables out of the basis; rows where that is
  // impossible are linearly dependent and get deactivated.
  void expel_artificials(double tol) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (std::abs(t_(i, j)) > tol) {
          col = j;
          break;
        }
      }
      if (col >= 0) pivot(i, col);
      else active_[i] = false;
    }
  }

  double objective_value() const { return -t_(obj(), rhs()); }

  Eigen::VectorXd solution() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < n_) x(basis_[i]) = t_(i, rhs());
    }
    return x;
  }

  std::vector<Eigen::Index> basic_columns() const {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < n_) cols.push_back(basis_[i]);
    }
    return cols;
  }

 private:
  Eigen::Index m_, n_;
  Eigen::MatrixXd t_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> active_;
};

}  // namespace

LpResult solve_standard_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, double tol) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  LpResult result;
  if (m == 0) {
    result.status = LpStatus::optimal;
    result.x = Eigen::VectorXd::Zero(n);
    return result;
  }

  Tableau tab(A, b);
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.set_costs(phase1);
  tab.optimize(n + m, tol);
  const double scale = std::max(1.0, b.cwiseAbs().sum());
  if (tab.objective_value() > tol * scale) {
    result.status = LpStatus::infeasible;
    return result;
  }
  tab.expel_artificials(tol);
  tab.set_costs(c);
  if (!tab.optimize(n, tol)) {
    throw Error("linear program is unbounded");
  }

  result.status = LpStatus::optimal;
  result.basis = tab.basic_columns();
  result.x = tab.solution();

  // Re-solve the basic system to remove accumulated pivoting error.
  if (!result.basis.empty()) {
    Eigen::MatrixXd AB(m, static_cast<Eigen::Index>(result.basis.size()));
    for (std::size_t k = 0; k < result.basis.size(); ++k) {
      AB.col(static_cast<Eigen::Index>(k)) = A.col(result.basis[k]);
    }
    const Eigen::VectorXd xb = AB.colPivHouseholderQr().solve(b);
    if ((AB * xb - b).cwiseAbs().maxCoeff() <=
            (A * result.x - b).cwiseAbs().maxCoeff() + 1e-15 &&
        xb.minCoeff() >= -tol) {
      result.x.setZero();
      for (std::size_t k = 0; k < result.basis.size(); ++k) {
        result.x(result.basis[k]) = xb(static_cast<Eigen::Index>(k));
      }
    }
  }
  result.objective = c.dot(result.x);
  return result;
}

Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                     int max_iterations) {
  const Eigen::Index n = A.cols();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double tol = 1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff()) *
                     static_cast<double>(std::max(A.rows(), n));

  auto solve_passive = [&](Eigen::VectorXd& z) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < n; ++j) if (passive[j]) idx.push_back(j);
    z = Eigen::VectorXd::Zero(n);
    if (idx.empty()) return;
    Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) Ap.col(static_cast<Eigen::Index>(k)) = A.col(idx[k]);
    const Eigen::VectorXd zp = Ap.colPivHouseholderQr().solve(b);
    for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(static_cast<Eigen::Index>(k));
  };

  for (int outer = 0; outer < max_iterations; ++outer) {
    const Eigen::VectorXd grad = A.transpose() * (b - A * x);
    Eigen::Index best = -1;
    double best_val = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[j] && grad(j) > best_val) {
        best_val = grad(j);
        best = j;
      }
    }
    if (best < 0) break;
    passive[best] = true;
    for (int inner = 0; inner < max_iterations; ++inner) {
      Eigen::VectorXd z;
      solve_passive(z);
      bool all_positive = true;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[j] && z(j) <= 0.0) all_positive = false;
      }
      if (all_positive) {
        x = z;
        break;
      }
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[j] && z(j) <= 0.0) {
          alpha = std::min(alpha, x(j) / (x(j) - z(j)));
        }
      }
      x += alpha * (z - x);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[j] && std::abs(x(j)) <= tol) {
          passive[j] = false;
          x(j) = 0.0;
        }
      }
    }
  }
  return x;
}

}  // namespace eulersim::detail
