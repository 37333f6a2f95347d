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

#include "eulersim/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "eulersim/errors.hpp"
#include "linear_programming.hpp"

namespace eulersim {

WeightAssignment WeightAssignment::from_values(std::vector<double> values,
                                               std::string group_name,
                                               double clip_tol) {
  for (double& v : values) {
    if (v < -clip_tol) {
      throw ConfigError("negative weight " + std::to_string(v));
    }
    if (std::abs(v) <= clip_tol) v = 0.0;
  }
  WeightAssignment w;
  w.total = std::accumulate(values.begin(), values.end(), 0.0);
  w.weights = std::move(values);
  w.group_name = std::move(group_name);
  return w;
}

WeightAssignment WeightAssignment::identity(std::size_t order,
                                            std::string group_name) {
  std::vector<double> v(order, 0.0);
  v.at(0) = 1.0;
  return from_values(std::move(v), std::move(group_name));
}

std::size_t WeightAssignment::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [](double v) { return v != 0.0; }));
}

namespace {

struct Block {
  const OperatorSum* source;
  OperatorSum target;
};

// One equality row per Pauli word in the span of the conjugated sources and
// the targets, one column per group element.
struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

LinearSystem build_system(std::span<const Block> blocks, const GroupClosure& g) {
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& block : blocks) {
    if (block.source->n_qubits() != g.n_qubits() ||
        block.target.n_qubits() != g.n_qubits()) {
      throw DimensionMismatchError("reachability: operators and group act on different qubit counts");
    }
    const DenseOperator h = to_dense(*block.source);
    std::vector<OperatorSum> conj;
    conj.reserve(g.order());
    std::map<PauliWord, std::size_t> row_of;
    auto row_index = [&](const PauliWord& w) {
      auto [it, fresh] = row_of.emplace(w, row_of.size());
      return it->second;
    };
    for (const auto& u : g.elements()) {
      conj.push_back(pauli_coefficients(conjugate(h, u)));
      for (const auto& t : conj.back().terms()) row_index(t.word);
    }
    for (const auto& t : block.target.terms()) row_index(t.word);

    const std::size_t base = rows.size();
    rows.resize(base + row_of.size(), std::vector<double>(g.order(), 0.0));
    rhs.resize(base + row_of.size(), 0.0);
    for (std::size_t e = 0; e < g.order(); ++e) {
      for (const auto& t : conj[e].terms()) rows[base + row_of.at(t.word)][e] = t.coeff;
    }
    for (const auto& t : block.target.terms()) rhs[base + row_of.at(t.word)] = t.coeff;
  }
  LinearSystem sys;
  sys.A.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(g.order()));
  sys.b.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t e = 0; e < g.order(); ++e) {
      sys.A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e)) = rows[i][e];
    }
    sys.b(static_cast<Eigen::Index>(i)) = rhs[i];
  }
  return sys;
}

WeightAssignment solve_blocks(std::span<const Block> blocks, const GroupClosure& g,
                              const SolveOptions& options) {
  const LinearSystem sys = build_system(blocks, g);
  const Eigen::VectorXd cost = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g.order()));
  const auto lp = detail::solve_standard_lp(sys.A, sys.b, cost, options.feasibility_tol);

  auto infeasible = [&](const std::string& why) {
    const Eigen::VectorXd w = detail::nnls(sys.A, sys.b);
    const double residual = (sys.A * w - sys.b).norm();
    std::ostringstream msg;
    msg << "target not reachable under this group (" << why
        << "); nonnegative least-squares residual " << residual;
    return InfeasibleError(msg.str(), residual);
  };
  if (lp.status != detail::LpStatus::optimal) throw infeasible("LP infeasible");

  std::vector<double> values(lp.x.data(), lp.x.data() + lp.x.size());
  for (double& v : values) {
    if (v < 0.0 && v >= -options.clip_tol) v = 0.0;
  }
  WeightAssignment w = WeightAssignment::from_values(std::move(values), "", options.clip_tol);

  Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(
      w.weights.data(), static_cast<Eigen::Index>(w.weights.size()));
  const double residual = sys.A.rows() ? (sys.A * wv - sys.b).cwiseAbs().maxCoeff() : 0.0;
  const double scale = std::max(1.0, sys.A.rows() ? sys.A.cwiseAbs().maxCoeff() : 0.0);
  if (residual > options.residual_tol * scale) {
    throw infeasible("residual " + std::to_string(residual) + " above tolerance");
  }
  return w;
}

}  // namespace

WeightAssignment solve_weights(const OperatorSum& h, const OperatorSum& target,
                               const GroupClosure& g, const SolveOptions& options) {
  if (h.empty()) throw ConfigError("solve_weights: input Hamiltonian is zero");
  const Block blocks[] = {{&h, target}};
  return solve_blocks(blocks, g, options);
}

WeightAssignment solve_weights_open(const OperatorSum& h_s,
                                    std::span<const OperatorSum> errors,
                                    const OperatorSum& target_s,
                                    const GroupClosure& g,
                                    const SolveOptions& options) {
  if (h_s.empty()) throw ConfigError("solve_weights_open: system Hamiltonian is zero");
  std::vector<Block> blocks{{&h_s, target_s}};
  for (const auto& s : errors) blocks.push_back({&s, OperatorSum(s.n_qubits())});
  return solve_blocks(blocks, g, options);
}

DenseOperator weighted_conjugation_sum(const DenseOperator& a,
                                       const WeightAssignment& w,
                                       const GroupClosure& g) {
  if (w.order() != g.order()) {
    throw DimensionMismatchError("weights and group have different orders");
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (w.weights[e] == 0.0) continue;
    const DenseOperator u = lift(g.element(e), a.n_qubits());
    acc.noalias() += w.weights[e] * (u.matrix().adjoint() * a.matrix() * u.matrix());
  }
  return DenseOperator(a.n_qubits(), std::move(acc));
}

double reachability_residual(const OperatorSum& h, const OperatorSum& target,
                             const WeightAssignment& w, const GroupClosure& g) {
  const DenseOperator mix = weighted_conjugation_sum(to_dense(h), w, g);
  return max_coefficient_difference(pauli_coefficients(mix), target);
}

WeightAssignment compose_schemes(const WeightAssignment& inner,
                                 const GroupClosure& inner_group,
                                 const WeightAssignment& outer,
                                 const GroupClosure& outer_group,
                                 const GroupClosure& product) {
  if (inner.order() != inner_group.order() || outer.order() != outer_group.order()) {
    throw DimensionMismatchError("compose_schemes: weights do not match their groups");
  }
  if (inner_group.n_qubits() != product.n_qubits() ||
      outer_group.n_qubits() != product.n_qubits()) {
    throw DimensionMismatchError("compose_schemes: groups act on different systems");
  }
  std::vector<double> values(product.order(), 0.0);
  for (std::size_t i = 0; i < inner.order(); ++i) {
    if (inner.weights[i] == 0.0) continue;
    for (std::size_t o = 0; o < outer.order(); ++o) {
      if (outer.weights[o] == 0.0) continue;
      const auto k = product.find(inner_group.element(i) * outer_group.element(o));
      if (!k) {
        throw ConfigError("compose_schemes: product element " +
                          inner_group.element_labels()[i] + " * " +
                          outer_group.element_labels()[o] +
                          " is not in the supplied closure");
      }
      values[*k] += inner.weights[i] * outer.weights[o];
    }
  }
  return WeightAssignment::from_values(std::move(values), "");
}

}  // namespace eulersim
