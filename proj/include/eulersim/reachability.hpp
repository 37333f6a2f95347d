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

#include <span>
#include <string>
#include <vector>

#include "eulersim/control_group.hpp"
#include "eulersim/pauli_algebra.hpp"

namespace eulersim {

/**
 * @brief Nonnegative weights w_g over the elements of a group closure,
 * indexed like GroupClosure::elements().
 */
struct WeightAssignment {
  std::vector<double> weights;
  double total = 0.0;
  std::string group_name;

  /// Clips values in [-clip_tol, clip_tol] to zero, rejects anything more
  /// negative, and recomputes the total.
  static WeightAssignment from_values(std::vector<double> values,
                                      std::string group_name,
                                      double clip_tol = 1e-12);

  /// w_identity = 1 on a group of the given order.
  static WeightAssignment identity(std::size_t order, std::string group_name);

  std::size_t order() const { return weights.size(); }
  std::size_t nonzero_count() const;
  double at(std::size_t element) const { return weights.at(element); }
};

struct SolveOptions {
  /// Simplex pivoting and phase-one feasibility tolerance.
  double feasibility_tol = 1e-10;
  /// Maximum per-coefficient residual accepted for a returned solution.
  double residual_tol = 1e-9;
  /// Weights below this are clipped to zero.
  double clip_tol = 1e-12;
};

/// Minimum-total-weight solution of sum_g w_g U_g^dagger h U_g = target,
/// w >= 0, solved as a linear program over Pauli coefficients.
/// Throws InfeasibleError (carrying the NNLS residual) when no solution
/// exists.
WeightAssignment solve_weights(const OperatorSum& h, const OperatorSum& target,
                               const GroupClosure& g,
                               const SolveOptions& options = {});

/// Like solve_weights, with the extra requirement
/// sum_g w_g U_g^dagger S U_g = 0 for every error operator S.
WeightAssignment solve_weights_open(const OperatorSum& h_s,
                                    std::span<const OperatorSum> errors,
                                    const OperatorSum& target_s,
                                    const GroupClosure& g,
                                    const SolveOptions& options = {});

/// sum_g w_g U_g^dagger a U_g (operators on more qubits are conjugated by
/// U_g (x) I).
DenseOperator weighted_conjugation_sum(const DenseOperator& a,
                                       const WeightAssignment& w,
                                       const GroupClosure& g);

/// Largest Pauli-coefficient residual of the reachability system.
double reachability_residual(const OperatorSum& h, const OperatorSum& target,
                             const WeightAssignment& w, const GroupClosure& g);

/**
 * @brief Weights realizing outer(inner(A)), where each map is a weighted
 * conjugation sum over its own group.
 *
 * The product element U_inner * U_outer, located in `product` up to phase,
 * receives w_inner * w_outer. Throws ConfigError if a product is missing
 * from `product`.
 */
WeightAssignment compose_schemes(const WeightAssignment& inner,
                                 const GroupClosure& inner_group,
                                 const WeightAssignment& outer,
                                 const GroupClosure& outer_group,
                                 const GroupClosure& product);

}  // namespace eulersim
