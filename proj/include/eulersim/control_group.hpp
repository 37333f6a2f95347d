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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulersim/pauli_algebra.hpp"

namespace eulersim {

inline constexpr std::size_t kDefaultMaxGroupOrder = 256;

/// Tolerance for identifying phase-canonicalized group elements.
inline constexpr double kPhaseEqualityTolerance = 1e-8;

/**
 * @brief A control generator: a unitary reached by driving a fixed
 * Hermitian axis, U = exp(-i * target_angle * control_axis) up to phase.
 */
struct GeneratorSpec {
  std::string label;
  DenseOperator unitary;
  OperatorSum control_axis;
  double target_angle;

  /// Builds the unitary from the axis and angle.
  static GeneratorSpec from_axis(std::string label, OperatorSum axis,
                                 double angle);
};

/// Rotates the first entry of (near-)largest modulus to the positive real
/// axis, giving a representative of the projective class of `u`.
DenseOperator phase_canonical(const DenseOperator& u);

/// True when a = e^{i phi} b for some phi, within `tol` (max-abs entry
/// difference of the canonical forms).
bool equal_up_to_phase(const DenseOperator& a, const DenseOperator& b,
                       double tol = kPhaseEqualityTolerance);

/**
 * @brief Finite group of unitaries modulo global phase, closed from a set
 * of generators, with its full multiplication table.
 *
 * Element 0 is the identity. Elements are stored phase-canonicalized.
 */
class GroupClosure {
 public:
  std::size_t order() const { return elements_.size(); }
  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t identity_index() const { return 0; }

  const std::vector<DenseOperator>& elements() const { return elements_; }
  const DenseOperator& element(std::size_t i) const { return elements_.at(i); }

  /// Index of U_i U_j.
  std::size_t product(std::size_t i, std::size_t j) const {
    return mult_table_[i][j];
  }
  const std::vector<std::vector<std::size_t>>& mult_table() const {
    return mult_table_;
  }
  std::size_t inverse(std::size_t i) const { return inverses_.at(i); }

  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::vector<std::string> generator_labels() const;
  /// Element index of generator `k`.
  std::size_t generator_element(std::size_t k) const {
    return generator_elements_.at(k);
  }
  /// Permutation g -> gamma_k g on element indices.
  const std::vector<std::size_t>& generator_edges(std::size_t k) const {
    return generator_edges_.at(k);
  }

  /// Shortest generator word for each element, or a Pauli-word label when
  /// the element is a Pauli word up to phase.
  const std::vector<std::string>& element_labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  /// Index of the element equal to `u` up to phase.
  std::optional<std::size_t> find(const DenseOperator& u) const;

  friend GroupClosure close_group(std::span<const GeneratorSpec> generators,
                                  std::size_t max_order);

 private:
  std::size_t insert_or_find(const DenseOperator& canonical, bool* inserted);
  double fingerprint(const DenseOperator& canonical) const;

  std::size_t n_qubits_ = 0;
  std::vector<DenseOperator> elements_;
  std::vector<std::vector<std::size_t>> mult_table_;
  std::vector<std::size_t> inverses_;
  std::vector<GeneratorSpec> generators_;
  std::vector<std::size_t> generator_elements_;
  std::vector<std::vector<std::size_t>> generator_edges_;
  std::vector<std::string> labels_;
  Eigen::MatrixXd fingerprint_weights_;
  std::multimap<double, std::size_t> index_;
};

/// Breadth-first closure under left multiplication by the generators,
/// identifying elements equal up to global phase.
/// Throws ClosureOverflowError past `max_order`, NotUnitaryError on
/// non-unitary generators, ConfigError on an empty generator list.
GroupClosure close_group(std::span<const GeneratorSpec> generators,
                         std::size_t max_order = kDefaultMaxGroupOrder);

struct CayleyEdge {
  std::size_t generator;
  std::size_t from;
  std::size_t to;

  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

/// Directed Cayley graph: an edge g -> gamma g for each element g and
/// generator gamma, grouped by generator in declaration order.
struct CayleyGraph {
  std::size_t vertex_count = 0;
  std::size_t generator_count = 0;
  std::size_t identity = 0;
  std::vector<CayleyEdge> edges;
};

CayleyGraph build_cayley_graph(const GroupClosure& g);

/// Closed walk that traverses every Cayley edge exactly once, starting and
/// ending at the identity.
struct EulerCycle {
  std::vector<CayleyEdge> edges;
  std::size_t length() const { return edges.size(); }
};

/// Hierholzer's algorithm from the identity; at each vertex the unused
/// out-edges are taken in generator declaration order.
EulerCycle eulerian_cycle(const CayleyGraph& graph);

/// Checks edge coverage, chaining, closure at the identity and vertex
/// multiplicity. Returns an empty string when all hold, otherwise a
/// description of the first violation.
std::string euler_cycle_violation(const EulerCycle& cycle,
                                  const CayleyGraph& graph);

/// (1/|G|) sum_g U_g^dagger a U_g. Operators on more qubits than the group
/// are averaged with the group acting on the leading qubits.
DenseOperator group_average(const DenseOperator& a, const GroupClosure& g);

/// Dimension of the commutant {A : [A, U_g] = 0 for all g}, from the null
/// space of the stacked commutation constraints for the generators.
/// Intended for n <= 5.
std::size_t commutant_dimension(const GroupClosure& g);

}  // namespace eulersim
