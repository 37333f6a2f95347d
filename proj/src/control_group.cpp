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

#include "eulersim/control_group.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "eulersim/errors.hpp"

namespace eulersim {

GeneratorSpec GeneratorSpec::from_axis(std::string label, OperatorSum axis,
                                       double angle) {
  DenseOperator u = matrix_exp(to_dense(axis), angle);
  return GeneratorSpec{std::move(label), std::move(u), std::move(axis), angle};
}

DenseOperator phase_canonical(const DenseOperator& u) {
  const auto& m = u.matrix();
  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      max_abs = std::max(max_abs, std::abs(m(i, j)));
  if (max_abs == 0.0) return u;
  // Ties between entries of equal modulus are broken by position; the
  // relative margin keeps rounding noise from flipping the choice.
  const double threshold = max_abs * (1.0 - 1e-6);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex a = m(i, j);
      if (std::abs(a) >= threshold) {
        const Complex rot = std::conj(a) / std::abs(a);
        return DenseOperator(u.n_qubits(), rot * m);
      }
    }
  }
  return u;
}

bool equal_up_to_phase(const DenseOperator& a, const DenseOperator& b,
                       double tol) {
  if (a.n_qubits() != b.n_qubits()) return false;
  return (phase_canonical(a).matrix() - phase_canonical(b).matrix())
             .cwiseAbs()
             .maxCoeff() <= tol;
}

namespace {

// Pauli word equal to u up to phase, if any.
std::optional<PauliWord> as_pauli_word(const DenseOperator& u) {
  const auto& m = u.matrix();
  const std::size_t n = u.n_qubits();
  Eigen::Index row = 0;
  m.col(0).cwiseAbs().maxCoeff(&row);
  const Complex base = m(row, 0);
  if (std::abs(std::abs(base) - 1.0) > 1e-8) return std::nullopt;
  const auto x = static_cast<std::uint64_t>(row);
  std::uint64_t z = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t col = std::uint64_t{1} << k;
    const Complex ratio = m(static_cast<Eigen::Index>(col ^ x),
                            static_cast<Eigen::Index>(col)) / base;
    if (std::abs(ratio + 1.0) < 1e-6) z |= col;
  }
  std::map<std::size_t, Pauli> letters;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    const bool xb = x & bit, zb = z & bit;
    if (xb && zb) letters.emplace(q, Pauli::Y);
    else if (xb) letters.emplace(q, Pauli::X);
    else if (zb) letters.emplace(q, Pauli::Z);
  }
  PauliWord word(n, std::move(letters));
  if (!equal_up_to_phase(u, to_dense(word))) return std::nullopt;
  return word;
}

}  // namespace

std::vector<std::string> GroupClosure::generator_labels() const {
  std::vector<std::string> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.label);
  return out;
}

std::optional<std::size_t> GroupClosure::find_label(
    const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

double GroupClosure::fingerprint(const DenseOperator& canonical) const {
  const auto& m = canonical.matrix();
  return (fingerprint_weights_.array() *
          (m.real().array() + 0.5 * m.imag().array()))
      .sum();
}

std::optional<std::size_t> GroupClosure::find(const DenseOperator& u) const {
  if (u.n_qubits() != n_qubits_) return std::nullopt;
  const DenseOperator c = phase_canonical(u);
  const double key = fingerprint(c);
  const double window = 1e-7;
  for (auto it = index_.lower_bound(key - window);
       it != index_.end() && it->first <= key + window; ++it) {
    if ((elements_[it->second].matrix() - c.matrix()).cwiseAbs().maxCoeff() <=
        kPhaseEqualityTolerance) {
      return it->second;
    }
  }
  return std::nullopt;
}

std::size_t GroupClosure::insert_or_find(const DenseOperator& canonical,
                                         bool* inserted) {
  if (auto found = find(canonical)) {
    *inserted = false;
    return *found;
  }
  elements_.push_back(canonical);
  index_.emplace(fingerprint(canonical), elements_.size() - 1);
  *inserted = true;
  return elements_.size() - 1;
}

GroupClosure close_group(std::span<const GeneratorSpec> generators,
                         std::size_t max_order) {
  if (generators.empty()) throw ConfigError("close_group: no generators");
  GroupClosure g;
  g.n_qubits_ = generators.front().unitary.n_qubits();
  for (const auto& gen : generators) {
    if (gen.unitary.n_qubits() != g.n_qubits_) {
      throw DimensionMismatchError("close_group: generators act on different qubit counts");
    }
    if (!is_unitary(gen.unitary)) {
      throw NotUnitaryError("close_group: generator '" + gen.label +
                            "' is not unitary");
    }
  }
  g.generators_.assign(generators.begin(), generators.end());

  const Eigen::Index d = Eigen::Index{1} << g.n_qubits_;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  g.fingerprint_weights_.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      g.fingerprint_weights_(i, j) = unit(rng) / static_cast<double>(d * d);

  std::vector<std::string> words{""};
  bool inserted = false;
  g.insert_or_find(phase_canonical(DenseOperator::identity(g.n_qubits_)), &inserted);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators_) {
      const DenseOperator next =
          phase_canonical(gen.unitary * g.elements_[idx]);
      const std::size_t j = g.insert_or_find(next, &inserted);
      if (!inserted) continue;
      if (g.elements_.size() > max_order) {
        throw ClosureOverflowError("group closure exceeds maximum order " +
                                   std::to_string(max_order));
      }
      words.push_back(words[idx].empty() ? gen.label
                                         : gen.label + "*" + words[idx]);
      queue.push_back(j);
    }
  }

  const std::size_t order = g.elements_.size();
  g.mult_table_.assign(order, std::vector<std::size_t>(order, 0));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      auto k = g.find(g.elements_[i] * g.elements_[j]);
      if (!k) {
        throw ClosureOverflowError("close_group: product left the closure; "
                                   "generators do not form a finite projective group");
      }
      g.mult_table_[i][j] = *k;
    }
  }
  g.inverses_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      if (g.mult_table_[i][j] == 0) {
        g.inverses_[i] = j;
        break;
      }
    }
  }
  for (const auto& gen : g.generators_) {
    const std::size_t k = *g.find(gen.unitary);
    g.generator_elements_.push_back(k);
    std::vector<std::size_t> perm(order);
    for (std::size_t e = 0; e < order; ++e) perm[e] = g.mult_table_[k][e];
    g.generator_edges_.push_back(std::move(perm));
  }

  g.labels_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (auto word = as_pauli_word(g.elements_[i])) {
      g.labels_[i] = word->to_string();
    } else {
      g.labels_[i] = words[i].empty() ? "I" : words[i];
    }
  }
  return g;
}

CayleyGraph build_cayley_graph(const GroupClosure& g) {
  CayleyGraph graph;
  graph.vertex_count = g.order();
  graph.generator_count = g.generator_count();
  graph.identity = g.identity_index();
  graph.edges.reserve(g.order() * g.generator_count());
  for (std::size_t k = 0; k < g.generator_count(); ++k) {
    const auto& perm = g.generator_edges(k);
    for (std::size_t v = 0; v < g.order(); ++v) {
      graph.edges.push_back({k, v, perm[v]});
    }
  }
  return graph;
}

EulerCycle eulerian_cycle(const CayleyGraph& graph) {
  const std::size_t V = graph.vertex_count;
  const std::size_t L = graph.generator_count;
  // out[v][k] = target of the k-labelled edge leaving v.
  std::vector<std::vector<std::size_t>> out(V, std::vector<std::size_t>(L, V));
  for (const auto& e : graph.edges) out.at(e.from).at(e.generator) = e.to;

  std::vector<std::size_t> next(V, 0);
  std::vector<std::size_t> vertex_stack{graph.identity};
  std::vector<CayleyEdge> edge_stack;
  std::vector<CayleyEdge> circuit;
  circuit.reserve(graph.edges.size());
  while (!vertex_stack.empty()) {
    const std::size_t v = vertex_stack.back();
    if (next[v] < L) {
      const std::size_t k = next[v]++;
      const std::size_t w = out[v][k];
      vertex_stack.push_back(w);
      edge_stack.push_back({k, v, w});
    } else {
      vertex_stack.pop_back();
      if (!edge_stack.empty()) {
        circuit.push_back(edge_stack.back());
        edge_stack.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != graph.edges.size()) {
    throw Error("eulerian_cycle: Cayley graph is not connected");
  }
  return EulerCycle{std::move(circuit)};
}

std::string euler_cycle_violation(const EulerCycle& cycle,
                                  const CayleyGraph& graph) {
  const std::size_t V = graph.vertex_count;
  const std::size_t L = graph.generator_count;
  if (cycle.length() != V * L) {
    return "length " + std::to_string(cycle.length()) + " != |G||Gamma| = " +
           std::to_string(V * L);
  }
  std::vector<std::vector<std::size_t>> out(V, std::vector<std::size_t>(L, V));
  for (const auto& e : graph.edges) out[e.from][e.generator] = e.to;
  std::vector<std::vector<int>> used(V, std::vector<int>(L, 0));
  std::vector<std::size_t> visits(V, 0);
  for (std::size_t j = 0; j < cycle.length(); ++j) {
    const auto& e = cycle.edges[j];
    if (e.from >= V || e.generator >= L) return "edge index out of range";
    if (out[e.from][e.generator] != e.to) return "step " + std::to_string(j) + " is not a Cayley edge";
    if (used[e.from][e.generator]++) return "edge traversed twice at step " + std::to_string(j);
    ++visits[e.from];
    const std::size_t next_from = (j + 1 < cycle.length()) ? cycle.edges[j + 1].from : graph.identity;
    if (e.to != next_from) return "walk breaks at step " + std::to_string(j);
  }
  if (cycle.edges.front().from != graph.identity) return "cycle does not start at the identity";
  for (std::size_t v = 0; v < V; ++v) {
    if (visits[v] != L) return "vertex " + std::to_string(v) + " visited " + std::to_string(visits[v]) + " times";
  }
  return {};
}

DenseOperator group_average(const DenseOperator& a, const GroupClosure& g) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
  for (const auto& u : g.elements()) {
    const DenseOperator lu = lift(u, a.n_qubits());
    acc.noalias() += lu.matrix().adjoint() * a.matrix() * lu.matrix();
  }
  return DenseOperator(a.n_qubits(), acc / static_cast<double>(g.order()));
}

std::size_t commutant_dimension(const GroupClosure& g) {
  const Eigen::Index d = Eigen::Index{1} << g.n_qubits();
  const Eigen::Index d2 = d * d;
  // Column-major vec: vec(U A) = (I (x) U) vec(A), vec(A U) = (U^T (x) I) vec(A).
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(d2, d2);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t k = 0; k < g.generator_count(); ++k) {
    const Eigen::MatrixXcd& u = g.element(g.generator_element(k)).matrix();
    Eigen::MatrixXcd c(d2, d2);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        c.block(i * d, j * d, d, d) = id(i, j) * u - u(j, i) * id;
      }
    }
    gram.noalias() += c.adjoint() * c;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::size_t nullity = 0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (std::abs(ev(k)) <= 1e-9 * scale) ++nullity;
  }
  return nullity;
}

}  // namespace eulersim
