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

#include <random>

#include "eulersim/errors.hpp"
#include "eulersim/models.hpp"
#include "eulersim/reachability.hpp"
#include "test_support.hpp"

namespace eulersim {
namespace {

using testing::Mat;
using testing::word_matrix;

double weight_of(const WeightAssignment& w, const GroupClosure& g, const std::string& label) {
  const auto k = g.find_label(label);
  if (!k) ADD_FAILURE() << "no element " << label;
  return k ? w.at(*k) : -1.0;
}

// Dipolar target from H_iso under G1 = {I, X0, Y0, Z0}: the coefficient
// equations on (XX, YY, ZZ) have a one-dimensional null space, so the LP
// optimum is found by scanning its feasible interval.
TEST(SolveWeights, DipolarUnderG1MatchesNullSpaceOracle) {
  const char* elems[] = {"II", "XI", "YI", "ZI"};
  const char* rows[] = {"XX", "YY", "ZZ"};
  const Mat h = word_matrix("XX") + word_matrix("YY") + word_matrix("ZZ");
  Eigen::MatrixXd A(3, 4);
  for (int r = 0; r < 3; ++r) {
    for (int e = 0; e < 4; ++e) {
      const Mat u = word_matrix(elems[e]);
      A(r, e) = ((word_matrix(rows[r]) * u.adjoint() * h * u).trace() / 4.0).real();
    }
  }
  Eigen::Vector3d b(-1, -1, 2);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  ASSERT_EQ(lu.rank(), 3);
  const Eigen::Vector4d xp = lu.solve(b);
  const Eigen::Vector4d ns = lu.kernel().col(0);
  double lo = -1e300, hi = 1e300;
  for (int j = 0; j < 4; ++j) {
    if (ns(j) > 0) lo = std::max(lo, -xp(j) / ns(j));
    if (ns(j) < 0) hi = std::min(hi, -xp(j) / ns(j));
  }
  const double t = ns.sum() > 0 ? lo : hi;
  const Eigen::Vector4d oracle = xp + t * ns;

  const auto g = group_preset("g1", 2).group;
  const auto w = solve_weights(heisenberg_chain(2, 1.0), dipolar_target(1.0), g);
  EXPECT_NEAR(w.total, oracle.sum(), 1e-12);
  EXPECT_NEAR(weight_of(w, g, "I"), oracle(0), 1e-12);
  EXPECT_NEAR(weight_of(w, g, "X0"), oracle(1), 1e-12);
  EXPECT_NEAR(weight_of(w, g, "Y0"), oracle(2), 1e-12);
  EXPECT_NEAR(weight_of(w, g, "Z0"), oracle(3), 1e-12);
  EXPECT_NEAR(w.total, 2.0, 1e-12);
  EXPECT_LT(reachability_residual(heisenberg_chain(2, 1.0), dipolar_target(1.0), w, g), 1e-12);
}

TEST(SolveWeights, IdentityTargetNeedsUnitWeight) {
  const auto g = group_preset("g1", 2).group;
  const auto h = heisenberg_chain(2, 1.0);
  const auto w = solve_weights(h, h, g);
  EXPECT_LE(w.total, 1.0 + 1e-12);
  EXPECT_LT(reachability_residual(h, h, w, g), 1e-12);
}

TEST(SolveWeights, ScalingInvariance) {
  const auto g = group_preset("g1", 2).group;
  const auto h = heisenberg_chain(2, 1.0);
  const auto t = dipolar_target(1.0);
  const auto w1 = solve_weights(h, t, g);
  const auto w2 = solve_weights(2.5 * h, 2.5 * t, g);
  const auto w3 = solve_weights(h, 0.5 * t, g);
  for (std::size_t e = 0; e < g.order(); ++e) {
    EXPECT_NEAR(w1.at(e), w2.at(e), 1e-12);
    EXPECT_NEAR(0.5 * w1.at(e), w3.at(e), 1e-12);
  }
}

TEST(SolveWeights, InfeasibleTargetReportsResidual) {
  const auto g = group_preset("g1", 2).group;
  try {
    solve_weights(heisenberg_chain(2, 1.0), OperatorSum::term(2, 1.0, "X0"), g);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_GT(e.residual(), 0.1);
  }
  EXPECT_THROW(solve_weights(OperatorSum(2), dipolar_target(1.0), g), ConfigError);
  EXPECT_THROW(solve_weights(heisenberg_chain(3, 1.0), heisenberg_chain(3, 1.0), g),
               DimensionMismatchError);
}

TEST(SolveWeights, HoneycombKitaevTotalWeightThree) {
  const auto g = group_preset("honeycomb", 6).group;
  const auto [ising, kitaev] = honeycomb_hamiltonians(HoneycombLattice::plaquette(), 1.0);
  const auto w = solve_weights(ising, kitaev, g);
  EXPECT_NEAR(w.total, 3.0, 1e-9);
  EXPECT_LT(reachability_residual(ising, kitaev, w, g), 1e-9);
}

TEST(SolveWeightsOpen, DephasingSchemeDecouplesXErrors) {
  const auto g = group_preset("g_dephasing", 2).group;
  const std::vector<OperatorSum> errors{OperatorSum::term(2, 1.0, "X0"),
                                        OperatorSum::term(2, 1.0, "X1")};
  const auto h = heisenberg_chain(2, 1.0);
  const auto w = solve_weights_open(h, errors, dipolar_target(1.0), g);
  EXPECT_NEAR(w.total, 2.0, 1e-12);
  EXPECT_LT(reachability_residual(h, dipolar_target(1.0), w, g), 1e-12);
  for (const auto& s : errors) {
    EXPECT_LT(reachability_residual(s, OperatorSum(2), w, g), 1e-12);
  }
}

TEST(SolveWeightsOpen, G1CannotDecoupleSecondQubit) {
  const auto g = group_preset("g1", 2).group;
  const std::vector<OperatorSum> errors{OperatorSum::term(2, 1.0, "Z1")};
  EXPECT_THROW(solve_weights_open(heisenberg_chain(2, 1.0), errors, dipolar_target(1.0), g),
               InfeasibleError);
}

TEST(WeightedConjugationSum, MatchesExplicitSum) {
  std::mt19937_64 rng(8);
  const auto g = group_preset("g_dephasing", 2).group;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> vals(g.order());
  for (auto& v : vals) v = u(rng);
  const auto w = WeightAssignment::from_values(vals, "g_dephasing");
  const Mat a = testing::random_hermitian(rng, 8);
  Mat expected = Mat::Zero(8, 8);
  for (std::size_t e = 0; e < g.order(); ++e) {
    const Mat ue = testing::kron2(g.element(e).matrix(), Mat::Identity(2, 2));
    expected += vals[e] * ue.adjoint() * a * ue;
  }
  const auto got = weighted_conjugation_sum(DenseOperator(3, a), w, g);
  EXPECT_LT(testing::max_abs(got.matrix() - expected), 1e-12);
}

TEST(WeightAssignment, ClipsAndRejects) {
  const auto w = WeightAssignment::from_values({1.0, 1e-14, -1e-14, 0.5}, "x");
  EXPECT_EQ(w.nonzero_count(), 2u);
  EXPECT_DOUBLE_EQ(w.total, 1.5);
  EXPECT_THROW(WeightAssignment::from_values({1.0, -0.1}, "x"), ConfigError);
  const auto id = WeightAssignment::identity(4, "g1");
  EXPECT_DOUBLE_EQ(id.total, 1.0);
  EXPECT_DOUBLE_EQ(id.at(0), 1.0);
}

// The Z2 scheme {I, Z0 Z1} at 1/2 each, followed by the dipolar G1 weights,
// gives weights on the 8-element dephasing representation.
TEST(ComposeSchemes, DephasingCompositionWeights) {
  const auto zz = GeneratorSpec::from_axis(
      "Z0+Z1", OperatorSum::term(2, 1.0, "Z0") + OperatorSum::term(2, 1.0, "Z1"), M_PI / 2);
  const auto z2 = close_group(std::span<const GeneratorSpec>(&zz, 1));
  ASSERT_EQ(z2.order(), 2u);
  const auto inner = WeightAssignment::from_values({0.5, 0.5}, "z2");
  const auto g1 = group_preset("g1", 2).group;
  const auto h = heisenberg_chain(2, 1.0);
  const auto outer = solve_weights(h, dipolar_target(1.0), g1);
  const auto product = group_preset("g_dephasing", 2).group;
  const auto w = compose_schemes(inner, z2, outer, g1, product);

  EXPECT_NEAR(w.total, 2.0, 1e-12);
  EXPECT_NEAR(weight_of(w, product, "I"), 0.25, 1e-12);
  EXPECT_NEAR(weight_of(w, product, "Z0"), 0.75, 1e-12);
  EXPECT_NEAR(weight_of(w, product, "Z1"), 0.75, 1e-12);
  EXPECT_NEAR(weight_of(w, product, "Z0 Z1"), 0.25, 1e-12);
  EXPECT_EQ(w.nonzero_count(), 4u);
  EXPECT_LT(reachability_residual(h, dipolar_target(1.0), w, product), 1e-12);
  EXPECT_LT(reachability_residual(OperatorSum::term(2, 1.0, "X0"), OperatorSum(2), w, product),
            1e-12);
  EXPECT_LT(reachability_residual(OperatorSum::term(2, 1.0, "X1"), OperatorSum(2), w, product),
            1e-12);
}

// Uniform DD over G_GL followed by dipolar weights over G1 (= G_odd at
// n = 2): the composed map equals the explicit double conjugation sum.
TEST(ComposeSchemes, MatchesBruteForceDoubleSum) {
  const auto gl = group_preset("g_gl", 2).group;
  const auto g1 = group_preset("g1", 2).group;
  const auto product = group_preset("pauli2", 2).group;
  const auto inner = WeightAssignment::from_values(std::vector<double>(4, 0.25), "g_gl");
  const auto h = heisenberg_chain(2, 1.0);
  const auto outer = solve_weights(h, dipolar_target(1.0), g1);
  const auto w = compose_schemes(inner, gl, outer, g1, product);
  EXPECT_NEAR(w.total, 2.0, 1e-12);

  std::mt19937_64 rng(12);
  const Mat a = testing::random_hermitian(rng, 4);
  Mat expected = Mat::Zero(4, 4);
  for (std::size_t i = 0; i < gl.order(); ++i) {
    for (std::size_t o = 0; o < g1.order(); ++o) {
      const Mat u = gl.element(i).matrix() * g1.element(o).matrix();
      expected += inner.at(i) * outer.at(o) * u.adjoint() * a * u;
    }
  }
  const auto got = weighted_conjugation_sum(DenseOperator(2, a), w, product);
  EXPECT_LT(testing::max_abs(got.matrix() - expected), 1e-12);
  EXPECT_LT(reachability_residual(h, dipolar_target(1.0), w, product), 1e-12);
  for (const char* s : {"X0", "Y0", "Z0", "X1", "Y1", "Z1"}) {
    EXPECT_LT(reachability_residual(OperatorSum::term(2, 1.0, s), OperatorSum(2), w, product),
              1e-12)
        << s;
  }
}

TEST(ComposeSchemes, MissingProductElementIsConfigError) {
  const auto gl = group_preset("g_gl", 2).group;
  const auto g1 = group_preset("g1", 2).group;
  const auto w = WeightAssignment::identity(4, "x");
  const auto w2 = WeightAssignment::from_values({0.0, 1.0, 0.0, 0.0}, "x");
  EXPECT_THROW(compose_schemes(w2, gl, w2, g1, g1), ConfigError);
  EXPECT_NO_THROW(compose_schemes(w, gl, w, g1, g1));
}

}  // namespace
}  // namespace eulersim
