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
#include <set>

#include "eulersim/errors.hpp"
#include "eulersim/models.hpp"
#include "test_support.hpp"

namespace eulersim {
namespace {

using testing::Mat;

TEST(Heisenberg, TermsAndSpectrum) {
  const auto h4 = heisenberg_chain(4, 0.5);
  EXPECT_EQ(h4.size(), 9u);
  for (const auto& t : h4.terms()) EXPECT_DOUBLE_EQ(t.coeff, 0.5);
  const Mat h2 = (testing::word_matrix("XX") + testing::word_matrix("YY") +
                  testing::word_matrix("ZZ"));
  EXPECT_LT(testing::max_abs(to_dense(heisenberg_chain(2, 1.0)).matrix() - h2), 1e-15);
  Eigen::SelfAdjointEigenSolver<Mat> es(h2);
  EXPECT_NEAR(es.eigenvalues()(0), -3.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues()(3), 1.0, 1e-13);
  EXPECT_THROW(heisenberg_chain(1, 1.0), ConfigError);
}

TEST(Targets, DipolarAndXyz) {
  const auto d = dipolar_target(2.0);
  EXPECT_DOUBLE_EQ(d.coefficient(PauliWord::parse(2, "X0 X1")), -2.0);
  EXPECT_DOUBLE_EQ(d.coefficient(PauliWord::parse(2, "Y0 Y1")), -2.0);
  EXPECT_DOUBLE_EQ(d.coefficient(PauliWord::parse(2, "Z0 Z1")), 4.0);
  EXPECT_EQ(xyz_target(1, 0, 0).size(), 1u);
}

TEST(Presets, GlobalGroupCommutesWithIsotropicChain) {
  const auto g = group_preset("g_gl", 4).group;
  const Mat h = to_dense(heisenberg_chain(4, 1.0)).matrix();
  for (const auto& u : g.elements()) {
    EXPECT_LT(testing::max_abs(u.matrix() * h - h * u.matrix()), 1e-12);
  }
}

TEST(Presets, OddGroupDecouplesChain) {
  const auto g = group_preset("g_odd", 4).group;
  EXPECT_LT(frobenius_norm(group_average(to_dense(heisenberg_chain(4, 1.0)), g)), 1e-12);
  for (const auto& gen : g.generators()) {
    for (const auto& t : gen.control_axis.terms()) {
      for (const auto& [q, p] : t.word.letters()) EXPECT_EQ(q % 2, 0u) << gen.label;
    }
  }
}

TEST(Presets, NamesAndErrors) {
  EXPECT_EQ(group_preset_names().size(), 6u);
  EXPECT_THROW(group_preset("nope", 2), ConfigError);
  EXPECT_THROW(group_preset("g_dephasing", 3), ConfigError);
  EXPECT_THROW(group_preset("honeycomb", 4), ConfigError);
  const auto deph = group_generators("g_dephasing", 2);
  std::vector<std::string> labels;
  for (const auto& g : deph) labels.push_back(g.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"X0", "Z0", "Z0+Z1"}));
}

TEST(Presets, DephasingRepresentation) {
  const auto g = group_preset("g_dephasing", 2).group;
  std::set<std::string> labels(g.element_labels().begin(), g.element_labels().end());
  EXPECT_EQ(labels, (std::set<std::string>{"I", "X0", "Y0", "Z0", "Z1", "Z0 Z1", "X0 Z1",
                                           "Y0 Z1"}));
}

// X on the vertex set S flips Z_a Z_b exactly when one endpoint is in S.
void expect_flip_pattern(const HoneycombLattice& lat, EdgeKind kind) {
  const auto s = lat.flip_set(kind);
  const std::set<std::size_t> in(s.begin(), s.end());
  for (const auto& e : lat.edges()) {
    const int hits = static_cast<int>(in.count(e.a) + in.count(e.b));
    EXPECT_EQ(hits % 2 == 0, e.kind == kind) << e.a << "-" << e.b;
  }
}

TEST(Honeycomb, PlaquetteStructure) {
  const auto lat = HoneycombLattice::plaquette();
  EXPECT_EQ(lat.vertex_count(), 6u);
  EXPECT_EQ(lat.edges().size(), 6u);
  for (auto k : {EdgeKind::forward_slash, EdgeKind::back_slash, EdgeKind::vertical}) {
    EXPECT_EQ(lat.edges_of(k).size(), 2u) << edge_kind_name(k);
    expect_flip_pattern(lat, k);
  }
  EXPECT_EQ(lat.flip_set(EdgeKind::forward_slash), (std::vector<std::size_t>{0, 1, 4, 5}));
  EXPECT_EQ(lat.flip_set(EdgeKind::back_slash), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(Honeycomb, BrickWallIsBipartiteWithDistinctKindsPerVertex) {
  const auto lat = HoneycombLattice::brick_wall(4, 6);
  std::vector<std::set<EdgeKind>> kinds(lat.vertex_count());
  std::vector<int> degree(lat.vertex_count(), 0);
  for (const auto& e : lat.edges()) {
    EXPECT_NE(lat.sublattice(e.a), lat.sublattice(e.b));
    EXPECT_TRUE(kinds[e.a].insert(e.kind).second);
    EXPECT_TRUE(kinds[e.b].insert(e.kind).second);
    ++degree[e.a];
    ++degree[e.b];
  }
  EXPECT_EQ(*std::max_element(degree.begin(), degree.end()), 3);
  for (auto k : {EdgeKind::forward_slash, EdgeKind::back_slash, EdgeKind::vertical}) {
    expect_flip_pattern(lat, k);
  }
  EXPECT_THROW(HoneycombLattice::brick_wall(1, 4), ConfigError);
}

TEST(Honeycomb, HamiltoniansPerEdgeKind) {
  const auto lat = HoneycombLattice::plaquette();
  const auto [ising, kitaev] = honeycomb_hamiltonians(lat, 1.0);
  EXPECT_EQ(ising.size(), 6u);
  EXPECT_EQ(kitaev.size(), 6u);
  for (const auto& e : lat.edges()) {
    const std::string a = std::to_string(e.a), b = std::to_string(e.b);
    const char p = e.kind == EdgeKind::forward_slash ? 'X' : e.kind == EdgeKind::back_slash ? 'Y' : 'Z';
    EXPECT_DOUBLE_EQ(ising.coefficient(PauliWord::parse(6, "Z" + a + " Z" + b)), 1.0);
    EXPECT_DOUBLE_EQ(kitaev.coefficient(PauliWord::parse(6, p + a + " " + p + b)), 1.0);
  }
}

TEST(Honeycomb, GroupAndTransformer) {
  const auto preset = group_preset("honeycomb", 6);
  EXPECT_EQ(preset.group.order(), 48u);
  const auto r = transformer_generator(6, {0, 1, 2, 3, 4, 5});
  const auto z0 = to_dense(OperatorSum::term(6, 1.0, "Z0 Z3"));
  const auto c = pauli_coefficients(conjugate(z0, r.unitary));
  EXPECT_NEAR(c.coefficient(PauliWord::parse(6, "X0 X3")), 1.0, 1e-12);
  EXPECT_EQ(c.size(), 1u);
  // Every element is a Pauli word times R^c, so the Pauli-labelled ones
  // form a subgroup of index 3.
  const auto& labels = preset.group.element_labels();
  const auto paulis = std::count_if(labels.begin(), labels.end(), [](const std::string& l) {
    return l.find('*') == std::string::npos && l.find('R') == std::string::npos;
  });
  EXPECT_EQ(paulis, 16);
}

TEST(Honeycomb, PartialWeightsIsolateEachEdgeKind) {
  const auto lat = HoneycombLattice::plaquette();
  const auto g = group_preset("honeycomb", 6).group;
  const auto [ising, kitaev] = honeycomb_hamiltonians(lat, 1.0);
  for (auto k : {EdgeKind::forward_slash, EdgeKind::back_slash, EdgeKind::vertical}) {
    OperatorSum part(6);
    for (const auto& t : kitaev.terms()) {
      const auto& letters = t.word.letters();
      const Pauli p = letters.begin()->second;
      const Pauli want = k == EdgeKind::forward_slash ? Pauli::X
                         : k == EdgeKind::back_slash  ? Pauli::Y
                                                      : Pauli::Z;
      if (p == want) part = part + OperatorSum(6, {t});
    }
    const auto w = honeycomb_partial_weights(g, k);
    EXPECT_NEAR(w.total, 1.0, 1e-15);
    EXPECT_EQ(w.nonzero_count(), 2u);
    EXPECT_LT(reachability_residual(ising, part, w, g), 1e-12) << edge_kind_name(k);
  }
  const auto all = honeycomb_weights(g);
  EXPECT_NEAR(all.total, 3.0, 1e-15);
  EXPECT_EQ(all.nonzero_count(), 6u);
  EXPECT_LT(reachability_residual(ising, kitaev, all, g), 1e-12);
}

}  // namespace
}  // namespace eulersim
