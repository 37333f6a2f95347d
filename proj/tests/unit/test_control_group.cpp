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

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "eulersim/control_group.hpp"
#include "eulersim/errors.hpp"
#include "eulersim/models.hpp"
#include "test_support.hpp"

namespace eulersim {
namespace {

using testing::Mat;

// Commutant dimension from the character formula (1/|G|) sum_g |tr U_g|^2,
// valid for projective representations since the phases cancel.
double character_commutant_dimension(const GroupClosure& g) {
  double acc = 0.0;
  for (const auto& u : g.elements()) acc += std::norm(u.matrix().trace());
  return acc / static_cast<double>(g.order());
}

// Independent Euler-cycle checker: every (vertex, generator) pair exactly
// once, consecutive edges chained, closed at the identity, and each edge
// realizing U_to = U_gamma U_from up to phase.
void expect_valid_euler_cycle(const GroupClosure& g, const EulerCycle& cycle) {
  ASSERT_EQ(cycle.length(), g.order() * g.generator_count());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    const auto& e = cycle.edges[i];
    EXPECT_TRUE(seen.insert({e.from, e.generator}).second) << "edge reused at " << i;
    const auto& next = cycle.edges[(i + 1) % cycle.length()];
    EXPECT_EQ(e.to, next.from) << "chain broken at " << i;
    const DenseOperator gamma = g.element(g.generator_element(e.generator));
    EXPECT_TRUE(equal_up_to_phase(g.element(e.to), gamma * g.element(e.from)));
  }
  EXPECT_EQ(cycle.edges.front().from, g.identity_index());
  EXPECT_EQ(cycle.edges.back().to, g.identity_index());
}

struct PresetCase {
  const char* name;
  std::size_t n;
  std::size_t order;
  std::size_t generators;
};

class PresetClosure : public ::testing::TestWithParam<PresetCase> {};

TEST_P(PresetClosure, OrderGeneratorCountAndEulerCycle) {
  const auto p = GetParam();
  const auto preset = group_preset(p.name, p.n);
  EXPECT_EQ(preset.group.order(), p.order);
  EXPECT_EQ(preset.group.generator_count(), p.generators);
  const auto graph = build_cayley_graph(preset.group);
  EXPECT_EQ(graph.edges.size(), p.order * p.generators);
  const auto cycle = eulerian_cycle(graph);
  EXPECT_EQ(euler_cycle_violation(cycle, graph), "");
  expect_valid_euler_cycle(preset.group, cycle);
}

INSTANTIATE_TEST_SUITE_P(
    Presets, PresetClosure,
    ::testing::Values(PresetCase{"g1", 2, 4, 2}, PresetCase{"g1", 3, 4, 2},
                      PresetCase{"g_odd", 4, 4, 2}, PresetCase{"g_gl", 2, 4, 2},
                      PresetCase{"g_dephasing", 2, 8, 3}, PresetCase{"pauli2", 2, 16, 4},
                      PresetCase{"honeycomb", 6, 48, 3}),
    [](const auto& info) {
      return std::string(info.param.name) + "_n" + std::to_string(info.param.n);
    });

TEST(GroupClosure, IdentityFirstAndPauliLabels) {
  const auto g = group_preset("g1", 2).group;
  EXPECT_TRUE(equal_up_to_phase(g.element(0), DenseOperator::identity(2)));
  std::vector<std::string> labels = g.element_labels();
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::string>{"I", "X0", "Y0", "Z0"}));
  EXPECT_EQ(g.find_label("Y0").has_value(), true);
  EXPECT_FALSE(g.find_label("X1").has_value());
}

TEST(GroupClosure, GroupAxiomsHoldOnRandomTriples) {
  const auto g = group_preset("honeycomb", 6).group;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(g.product(g.product(a, b), c), g.product(a, g.product(b, c)));
    EXPECT_EQ(g.product(a, g.inverse(a)), g.identity_index());
    EXPECT_TRUE(equal_up_to_phase(g.element(g.product(a, b)), g.element(a) * g.element(b), 1e-9));
  }
}

TEST(GroupClosure, GeneratorEdgesArePermutations) {
  const auto g = group_preset("pauli2", 2).group;
  for (std::size_t k = 0; k < g.generator_count(); ++k) {
    auto perm = g.generator_edges(k);
    for (std::size_t e = 0; e < g.order(); ++e) {
      EXPECT_EQ(perm[e], g.product(g.generator_element(k), e));
    }
    std::sort(perm.begin(), perm.end());
    for (std::size_t e = 0; e < g.order(); ++e) EXPECT_EQ(perm[e], e);
  }
}

TEST(GroupClosure, FindIgnoresGlobalPhase) {
  const auto g = group_preset("pauli2", 2).group;
  const DenseOperator u = testing::C(0, 1) * g.element(5);
  EXPECT_EQ(g.find(u), std::optional<std::size_t>(5));
}

TEST(GroupClosure, Errors) {
  const auto gens = group_generators("pauli2", 2);
  EXPECT_THROW(close_group(gens, 3), ClosureOverflowError);
  EXPECT_THROW(close_group(std::span<const GeneratorSpec>{}), ConfigError);
  const GeneratorSpec bad{"bad", 2.0 * DenseOperator::identity(2), OperatorSum::term(2, 1.0, "X0"), 1.0};
  EXPECT_THROW(close_group(std::span<const GeneratorSpec>(&bad, 1)), NotUnitaryError);
}

TEST(GroupClosure, Z2CycleHasLengthTwo) {
  const auto zz = GeneratorSpec::from_axis("Z0+Z1",
                                           OperatorSum::term(2, 1.0, "Z0") +
                                               OperatorSum::term(2, 1.0, "Z1"),
                                           M_PI / 2);
  const auto g = close_group(std::span<const GeneratorSpec>(&zz, 1));
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(eulerian_cycle(build_cayley_graph(g)).length(), 2u);
}

TEST(EulerCycle, ViolationDetectsCorruption) {
  const auto g = group_preset("g1", 2).group;
  const auto graph = build_cayley_graph(g);
  auto cycle = eulerian_cycle(graph);
  std::swap(cycle.edges[1], cycle.edges[2]);
  EXPECT_NE(euler_cycle_violation(cycle, graph), "");
  cycle = eulerian_cycle(graph);
  cycle.edges.pop_back();
  EXPECT_NE(euler_cycle_violation(cycle, graph), "");
}

TEST(EulerCycle, DeterministicAcrossBuilds) {
  const auto a = eulerian_cycle(build_cayley_graph(group_preset("honeycomb", 6).group));
  const auto b = eulerian_cycle(build_cayley_graph(group_preset("honeycomb", 6).group));
  EXPECT_EQ(a.edges, b.edges);
}

class CommutantOracle : public ::testing::TestWithParam<std::pair<const char*, std::size_t>> {};

TEST_P(CommutantOracle, MatchesCharacterFormula) {
  const auto g = group_preset(GetParam().first, GetParam().second).group;
  EXPECT_NEAR(static_cast<double>(commutant_dimension(g)), character_commutant_dimension(g), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Presets, CommutantOracle,
                         ::testing::Values(std::make_pair("g1", 2), std::make_pair("g_gl", 2),
                                           std::make_pair("g_dephasing", 2),
                                           std::make_pair("pauli2", 2),
                                           std::make_pair("g_odd", 3)));

TEST(GroupAverage, IsTracePreservingProjectorOntoCommutant) {
  std::mt19937_64 rng(9);
  const auto g = group_preset("g_dephasing", 2).group;
  for (int trial = 0; trial < 5; ++trial) {
    const DenseOperator a(2, testing::random_hermitian(rng, 4));
    const auto p = group_average(a, g);
    EXPECT_LT(testing::max_abs(group_average(p, g).matrix() - p.matrix()), 1e-13);
    EXPECT_NEAR(std::abs(p.trace() - a.trace()), 0.0, 1e-12);
    for (const auto& u : g.elements()) {
      EXPECT_LT(testing::max_abs(u.matrix() * p.matrix() - p.matrix() * u.matrix()), 1e-12);
    }
  }
}

TEST(GroupAverage, IrreduciblePauliGroupDepolarizes) {
  std::mt19937_64 rng(10);
  const auto g = group_preset("pauli2", 2).group;
  const Mat a = testing::random_hermitian(rng, 4);
  const auto p = group_average(DenseOperator(2, a), g);
  const Mat expected = a.trace() / 4.0 * Mat::Identity(4, 4);
  EXPECT_LT(testing::max_abs(p.matrix() - expected), 1e-13);
}

TEST(GroupAverage, ActsOnLeadingQubitsOfLargerOperators) {
  const auto g = group_preset("pauli2", 2).group;
  const auto a = to_dense(OperatorSum::term(3, 1.0, "X0 Z2") + OperatorSum::term(3, 0.5, "Z2"));
  const auto c = pauli_coefficients(group_average(a, g));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_NEAR(c.coefficient(PauliWord::parse(3, "Z2")), 0.5, 1e-14);
}

}  // namespace
}  // namespace eulersim
