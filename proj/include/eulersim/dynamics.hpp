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
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "eulersim/pauli_algebra.hpp"
#include "eulersim/scheduler.hpp"

namespace eulersim {

/// System coupled to a bath: H_S (x) I + I (x) H_B + sum_a S_a (x) B_a, with
/// the system on the leading qubits.
struct OpenSystemModel {
  OperatorSum system;
  OperatorSum bath;
  std::vector<std::pair<OperatorSum, OperatorSum>> couplings;
  std::uint64_t seed = 0;

  OpenSystemModel(OperatorSum system, OperatorSum bath,
                  std::vector<std::pair<OperatorSum, OperatorSum>> couplings = {},
                  std::uint64_t seed = 0);

  std::size_t system_qubits() const { return system.n_qubits(); }
  std::size_t bath_qubits() const { return bath.n_qubits(); }
  std::size_t total_qubits() const { return system_qubits() + bath_qubits(); }

  /// The full Hamiltonian on system + bath.
  OperatorSum total() const;
  /// sum_a S_a (x) B_a.
  OperatorSum interaction() const;
  /// Frobenius norm of the interaction as a dense matrix.
  double coupling_norm() const;
  /// The system operators S_a.
  std::vector<OperatorSum> system_errors() const;
};

struct EvolveOptions {
  /// Ramp substeps are doubled until the ramp propagator changes by less
  /// than this (max-abs entry).
  double substep_tolerance = 1e-10;
  std::size_t initial_substeps = 4;
  int max_doublings = 16;
};

/// Propagator of dU/dt = -i H(t) U over [t0, t1] with `steps` steps of the
/// fourth-order commutator-free scheme built on the two Gauss-Legendre
/// nodes.
DenseOperator propagate_cf4(const std::function<DenseOperator(double)>& hamiltonian,
                            double t0, double t1, std::size_t steps);

/// Same, doubling the step count until successive results agree.
/// Throws ConvergenceError after options.max_doublings doublings.
DenseOperator propagate_adaptive(const std::function<DenseOperator(double)>& hamiltonian,
                                 double t0, double t1, const EvolveOptions& options = {});

/// Lab-frame propagator over one control cycle under h + H_c(t). Controls
/// act on the leading qubits of h. Bang-bang schedules are evaluated as a
/// product of toggling-frame exponentials.
DenseOperator evolve_cycle(const Schedule& s, const OperatorSum& h,
                           const EvolveOptions& options = {});

/// The cycle propagator raised to the power `cycles`.
DenseOperator evolve_schedule(const Schedule& s, const OperatorSum& h, int cycles,
                              const EvolveOptions& options = {});

/// u^k by repeated squaring.
DenseOperator matrix_power(const DenseOperator& u, int k);

/// 1 - |tr(u^dagger v)| / 2^n. Throws NotUnitaryError for non-unitary input.
double phase_invariant_infidelity(const DenseOperator& u, const DenseOperator& v);

/// min over phi of ||u - e^{i phi} v||_F.
double phase_aligned_distance(const DenseOperator& u, const DenseOperator& v);

/// Partial trace over the trailing `n_b` qubits.
DenseOperator partial_trace_bath(const DenseOperator& a, std::size_t n_s, std::size_t n_b);
/// Partial trace over the leading `n_s` qubits.
DenseOperator partial_trace_system(const DenseOperator& a, std::size_t n_s, std::size_t n_b);

struct ErrorDecomposition {
  DenseOperator system_part;
  DenseOperator bath_part;
  DenseOperator coupling_part;
  double system_norm = 0.0;
  double bath_norm = 0.0;
  double coupling_norm = 0.0;
};

/// Orthogonal split h = A (x) I + I (x) B + C with A traceless and C
/// orthogonal to both local parts. The identity component is carried by
/// the bath part.
ErrorDecomposition effective_error_decomposition(const DenseOperator& h_bar,
                                                 std::size_t n_s, std::size_t n_b);

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares fit of log(error) against log(x). Requires at least four
/// points spanning a decade in x, all errors above 1e-12; throws ConfigError
/// otherwise.
ScalingFit scaling_order_fit(std::span<const std::pair<double, double>> points);

/// Plain least-squares log-log fit with no span or floor requirements.
ScalingFit loglog_fit(std::span<const std::pair<double, double>> points);

/// 1 - <phi| rho_S |phi>, where rho_S = tr_B(u (|psi><psi| (x) rho_bath) u^dagger)
/// and phi = v psi is the target state of the system alone.
double reduced_state_infidelity(const DenseOperator& u, const Eigen::VectorXcd& psi,
                                const Eigen::MatrixXcd& rho_bath, const DenseOperator& v,
                                std::size_t n_s, std::size_t n_b);

struct SimulationReport {
  DenseOperator final_propagator;
  DenseOperator target_propagator;
  double infidelity = 0.0;
  std::vector<double> per_cycle_error;
};

/// Evolves `cycles` cycles of s under h and compares with exp(-i target
/// T_sim m) after each cycle m (phase-aligned Frobenius distance).
SimulationReport simulate(const Schedule& s, const OperatorSum& h,
                          const OperatorSum& target, int cycles,
                          const EvolveOptions& options = {});

}  // namespace eulersim
