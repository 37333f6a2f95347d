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

#include <map>
#include <span>
#include <string>

#include "eulersim/control_group.hpp"
#include "eulersim/pauli_algebra.hpp"
#include "eulersim/pulses.hpp"
#include "eulersim/quadrature.hpp"
#include "eulersim/scheduler.hpp"

namespace eulersim {

/// (1/D) integral of u(tau)^dagger h u(tau) over the pulse, for a pulse
/// acting on the leading qubits of h.
DenseOperator ramp_average(const GeneratorPulse& pulse, const DenseOperator& h,
                           const QuadratureOptions& options = {});

/// F_Gamma(h): the ramp averages, further averaged over the generators.
DenseOperator f_gamma(const OperatorSum& h, std::span<const GeneratorPulse> pulses,
                      const QuadratureOptions& options = {});

/// ||Pi_G[F_Gamma(h)]||_F.
double decoupling_residual(const OperatorSum& h, const GroupClosure& g,
                           std::span<const GeneratorPulse> pulses,
                           const QuadratureOptions& options = {});

/// Leading average Hamiltonian (1/T_c) integral of U_c^dagger h U_c over one
/// cycle. Coasts are exact; ramps use Gauss-Legendre quadrature. For h on
/// more qubits than the controls, the controls act as U_c (x) I.
DenseOperator avg_hamiltonian_first(const Schedule& s, const OperatorSum& h,
                                    const QuadratureOptions& options = {});

/// Next Magnus term (-i/2T_c) int_0^T_c dt int_0^t ds [H'(t), H'(s)] of the
/// toggling-frame Hamiltonian H' = U_c^dagger h U_c. In-ramp double
/// integrals use nested quadrature. Throws DimensionLimitError above
/// `qubit_limit` qubits.
DenseOperator second_order_average(const Schedule& s, const OperatorSum& h,
                                   std::size_t qubit_limit = 3,
                                   const QuadratureOptions& options = {});

struct MagnusEstimate {
  /// (t ||h||)^(kappa + 1) with the unknown prefactor set to 1.
  double estimate = 0.0;
  /// t ||h|| < pi, the convergence condition of the expansion.
  bool converged = true;
  /// Always true: the prefactor is only known to be of order one.
  bool prefactor_unknown = true;
};

MagnusEstimate magnus_error_estimate(const OperatorSum& h, double t, int kappa);

struct AverageReport {
  DenseOperator h_bar_0;
  /// (T_sim / T_c) times the target.
  DenseOperator target_scaled;
  std::map<std::string, double> decoupling_residuals;
  MagnusEstimate magnus;

  /// ||h_bar_0 - target_scaled||_F.
  double residual_norm() const { return frobenius_norm(h_bar_0 - target_scaled); }
};

/// Averages `h` over the schedule and compares with (T_sim/T_c) target.
/// The decoupling residual of h is recorded under "input"; for bang-bang
/// schedules there are no ramps and it is omitted.
AverageReport average_report(const Schedule& s, const OperatorSum& h,
                             const OperatorSum& target,
                             const QuadratureOptions& options = {});

}  // namespace eulersim
