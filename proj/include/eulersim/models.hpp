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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulersim/control_group.hpp"
#include "eulersim/dynamics.hpp"
#include "eulersim/pauli_algebra.hpp"
#include "eulersim/reachability.hpp"

namespace eulersim {

inline constexpr std::uint64_t kDefaultModelSeed = 7;

/// sum_i J (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}), open boundary. Odd n
/// is accepted with a warning on std::clog.
OperatorSum heisenberg_chain(std::size_t n, double j);

/// Jx X0 X1 + Jy Y0 Y1 + Jz Z0 Z1.
OperatorSum xyz_target(double jx, double jy, double jz);

/// xyz_target(-J, -J, 2J).
OperatorSum dipolar_target(double j);

enum class EdgeKind { forward_slash, back_slash, vertical };

std::string edge_kind_name(EdgeKind kind);

struct HoneycombEdge {
  std::size_t a;
  std::size_t b;
  EdgeKind kind;
};

/**
 * @brief Honeycomb lattice in its brick-wall embedding.
 *
 * Vertex (r, c) has index r * cols + c. Horizontal edges join (r, c) and
 * (r, c+1) and are forward slashes when r + c is even, back slashes
 * otherwise; vertical edges join (r, c) and (r+1, c) when r + c is even.
 */
class HoneycombLattice {
 public:
  /// A single hexagon: brick_wall(2, 3).
  static HoneycombLattice plaquette();
  static HoneycombLattice brick_wall(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t vertex_count() const { return rows_ * cols_; }
  std::pair<std::size_t, std::size_t> coordinates(std::size_t v) const {
    return {v / cols_, v % cols_};
  }
  /// Sublattice parity (r + c) mod 2.
  int sublattice(std::size_t v) const;
  const std::vector<HoneycombEdge>& edges() const { return edges_; }
  std::vector<HoneycombEdge> edges_of(EdgeKind kind) const;

  /**
   * Vertex set whose X product preserves ZZ on edges of `kind` and flips it
   * on the other two kinds, i.e. a 2-coloring with `kind` edges
   * monochromatic and the rest bichromatic. Of the two color classes, the
   * one containing the first edge of `kind` is returned. Throws ConfigError
   * if no such coloring exists.
   */
  std::vector<std::size_t> flip_set(EdgeKind kind) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<HoneycombEdge> edges_;
};

/// (J sum_edges Z Z, J sum of XX on forward slashes + YY on back slashes +
/// ZZ on verticals).
std::pair<OperatorSum, OperatorSum> honeycomb_hamiltonians(const HoneycombLattice& lat,
                                                           double j);

/// R on every listed qubit: axis sum_v (X_v + Y_v + Z_v)/sqrt(3), angle
/// 2 pi/3, so that R^dagger X R = Y, R^dagger Y R = Z, R^dagger Z R = X.
GeneratorSpec transformer_generator(std::size_t n_qubits,
                                    const std::vector<std::size_t>& qubits,
                                    std::string label = "R");

/// {rho_X, tau_X, R} for the lattice.
std::vector<GeneratorSpec> honeycomb_group_generators(const HoneycombLattice& lat);

/// Weights 1/2 on the two elements whose conjugation average keeps only
/// the `kind` edges of the Ising input, rotated to the matching Kitaev
/// coupling: {R, rho R} for forward slashes, {R^2, tau R^2} for back
/// slashes, {I, rho tau} for verticals. `g` must be closed from
/// honeycomb_group_generators(lat).
WeightAssignment honeycomb_partial_weights(const GroupClosure& g, EdgeKind kind);

/// Sum of the three partial weight sets: six elements at 1/2, W = 3.
WeightAssignment honeycomb_weights(const GroupClosure& g);

struct PresetGroup {
  std::string name;
  std::vector<GeneratorSpec> generators;
  GroupClosure group;
};

/// "g1", "g_odd", "g_gl", "g_dephasing", "pauli2" or "honeycomb" on n
/// qubits. Throws ConfigError for an unknown name or incompatible n.
std::vector<GeneratorSpec> group_generators(std::string_view name, std::size_t n);
PresetGroup group_preset(std::string_view name, std::size_t n);
std::vector<std::string> group_preset_names();

/// Heisenberg chain (J = 1) on n_s qubits coupled to a one-qubit bath.
/// For each system qubit and each axis letter in `axes` ("x", "y", "z")
/// there is a coupling sigma_axis (x) B with B a seeded random traceless
/// bath operator of spectral norm `scale`; the bath Hamiltonian is drawn
/// the same way.
OpenSystemModel open_chain_model(std::size_t n_s, std::string_view axes,
                                 std::uint64_t seed = kDefaultModelSeed,
                                 double scale = 0.1);

}  // namespace eulersim
