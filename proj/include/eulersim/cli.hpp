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

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eulersim/models.hpp"
#include "eulersim/pauli_algebra.hpp"
#include "eulersim/reachability.hpp"
#include "eulersim/scheduler.hpp"

namespace eulersim {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInfeasible = 2,
  kExitConfigError = 3,
};

struct RunConfig {
  std::string command;
  std::string model = "heisenberg2";
  std::string target = "dipolar";
  std::string group = "g1";
  std::string mode = "eulerian";
  std::string shape = "sine2";
  /// Defaults to tsim / 10.
  std::optional<double> delta;
  double tsim = 0.01;
  int cycles = 1;
  std::uint64_t seed = kDefaultModelSeed;
  std::string out;
  /// Pass/fail tolerance; verify defaults to 1e-8, simulate only checks
  /// when one is given.
  std::optional<double> tol;
  std::string schedule_path;
  std::string param = "cycle";
  double min = 0.0;
  double max = 0.0;
  int points = 6;
  std::string metric = "distance";
  std::size_t qubits = 2;
  bool lattice = false;
};

/// Hamiltonian, target and error operators resolved from preset names or
/// operator JSON files. Closed models have no bath qubits.
struct Problem {
  OperatorSum hamiltonian;
  OperatorSum system;
  OperatorSum target;
  std::optional<OperatorSum> bath;
  std::vector<OperatorSum> errors;

  std::size_t system_qubits() const { return system.n_qubits(); }
  std::size_t bath_qubits() const { return bath ? bath->n_qubits() : 0; }
};

/// Operator presets: "heisenberg<n>", "dipolar", "xx", "xyz:jx,jy,jz",
/// "honeycomb" (Ising input), "kitaev", or a path to an operator JSON file.
OperatorSum resolve_operator(const std::string& name);

/// Model presets are the operator presets plus "open_chain[_axes]" (two
/// system qubits and a one-qubit bath; axes default to "xyz"). The target
/// "same" means the system Hamiltonian itself.
Problem resolve_problem(const RunConfig& cfg);

/// Control system for the configured group and shape, with ramps of
/// duration `delta` (a nominal duration is used for bang-bang schedules).
std::shared_ptr<const ControlSystem> resolve_controls(const RunConfig& cfg,
                                                      std::size_t n_system, double delta);

/// Reachability weights for the problem (the open-system variant when it
/// has error operators).
WeightAssignment synthesize_weights(const Problem& p, const ControlSystem& cs);

/// Operator whose evolution for T_sim is the ideal cycle: the target on the
/// system plus, for open models, (T_c / T_sim) times the bath Hamiltonian.
OperatorSum ideal_target(const Problem& p, const Schedule& s);

/// Parses `args` (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersim
