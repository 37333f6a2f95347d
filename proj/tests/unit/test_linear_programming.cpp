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

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "linear_programming.hpp"

namespace eulersim::detail {
namespace {

// Enumerates every basis of m columns; returns the smallest objective over
// the basic feasible solutions, or +inf when none exists.
double brute_force_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    Eigen::MatrixXd B(m, m);
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) if (mask & (1u << j)) cols.push_back(j);
    for (int k = 0; k < m; ++k) B.col(k) = A.col(cols[k]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (lu.rank() < m) continue;
    const Eigen::VectorXd xb = lu.solve(b);
    if (xb.minCoeff() < -1e-12) continue;
    double obj = 0.0;
    for (int k = 0; k < m; ++k) obj += c(cols[k]) * xb(k);
    best = std::min(best, obj);
  }
  return best;
}

// Least-squares optimum over every support set with a nonnegative solution.
double brute_force_nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  const int n = static_cast<int>(A.cols());
  double best = b.norm();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) if (mask & (1u << j)) cols.push_back(j);
    Eigen::MatrixXd S(A.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) S.col(static_cast<Eigen::Index>(k)) = A.col(cols[k]);
    const Eigen::VectorXd z = S.colPivHouseholderQr().solve(b);
    if (z.minCoeff() < 0) continue;
    best = std::min(best, (S * z - b).norm());
  }
  return best;
}

TEST(SimplexLp, MatchesBasisEnumerationOnRandomFeasibleProblems) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    Eigen::MatrixXd A(3, 7);
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 7; ++j) A(i, j) = n(rng);
    Eigen::VectorXd x0(7);
    for (int j = 0; j < 7; ++j) x0(j) = u(rng);
    const Eigen::VectorXd b = A * x0;
    Eigen::VectorXd c(7);
    for (int j = 0; j < 7; ++j) c(j) = 0.5 + u(rng);
    const auto r = solve_standard_lp(A, b, c);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_GE(r.x.minCoeff(), 0.0);
    EXPECT_LT((A * r.x - b).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(r.objective, brute_force_lp(A, b, c), 1e-9);
  }
}

TEST(SimplexLp, DetectsInfeasibility) {
  Eigen::MatrixXd A(2, 3);
  A << 1, 1, 1, 1, 2, 3;
  Eigen::VectorXd b(2);
  b << -1, 1;
  EXPECT_EQ(solve_standard_lp(A, b, Eigen::VectorXd::Ones(3)).status, LpStatus::infeasible);
}

TEST(SimplexLp, HandlesRedundantRows) {
  Eigen::MatrixXd A(3, 3);
  A << 1, 1, 0, 2, 2, 0, 0, 1, 1;
  Eigen::VectorXd b(3);
  b << 1, 2, 1;
  Eigen::VectorXd c(3);
  c << 1, 3, 1;
  const auto r = solve_standard_lp(A, b, c);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
  EXPECT_LT((A * r.x - b).norm(), 1e-12);
}

TEST(Nnls, MatchesSupportEnumeration) {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::MatrixXd A(6, 5);
    for (int i = 0; i < 6; ++i) for (int j = 0; j < 5; ++j) A(i, j) = n(rng);
    Eigen::VectorXd b(6);
    for (int i = 0; i < 6; ++i) b(i) = n(rng);
    const Eigen::VectorXd x = nnls(A, b);
    EXPECT_GE(x.minCoeff(), 0.0);
    EXPECT_NEAR((A * x - b).norm(), brute_force_nnls(A, b), 1e-9);
  }
}

}  // namespace
}  // namespace eulersim::detail
