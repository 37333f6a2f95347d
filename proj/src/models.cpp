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

#include "eulersim/models.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <queue>
#include <random>

#include "eulersim/errors.hpp"

namespace eulersim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

OperatorSum single(std::size_t n, Pauli p, std::size_t q, double c = 1.0) {
  return OperatorSum(n, {{c, PauliWord(n, {{q, p}})}});
}

OperatorSum pair_term(std::size_t n, Pauli p, std::size_t a, std::size_t b, double c) {
  return OperatorSum(n, {{c, PauliWord(n, {{a, p}, {b, p}})}});
}

OperatorSum sum_over(std::size_t n, Pauli p, const std::vector<std::size_t>& qubits) {
  OperatorSum acc(n);
  for (std::size_t q : qubits) acc = acc + single(n, p, q);
  return acc;
}

}  // namespace

OperatorSum heisenberg_chain(std::size_t n, double j) {
  if (n < 2) throw ConfigError("Heisenberg chain needs at least two qubits");
  if (n % 2 != 0) {
    std::clog << "warning: Heisenberg chain with odd n = " << n
              << "; the odd-qubit decoupling group assumes even n\n";
  }
  OperatorSum h(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) h = h + pair_term(n, p, i, i + 1, j);
  }
  return h;
}

OperatorSum xyz_target(double jx, double jy, double jz) {
  return pair_term(2, Pauli::X, 0, 1, jx) + pair_term(2, Pauli::Y, 0, 1, jy) +
         pair_term(2, Pauli::Z, 0, 1, jz);
}

OperatorSum dipolar_target(double j) { return xyz_target(-j, -j, 2.0 * j); }

std::string edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::forward_slash: return "forward_slash";
    case EdgeKind::back_slash: return "back_slash";
    case EdgeKind::vertical: return "vertical";
  }
  return "unknown";
}

HoneycombLattice HoneycombLattice::plaquette() { return brick_wall(2, 3); }

HoneycombLattice HoneycombLattice::brick_wall(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw ConfigError("brick wall needs at least 2 rows and 2 columns");
  HoneycombLattice lat;
  lat.rows_ = rows;
  lat.cols_ = cols;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      const bool even = (r + c) % 2 == 0;
      if (c + 1 < cols) {
        lat.edges_.push_back({v, v + 1, even ? EdgeKind::forward_slash : EdgeKind::back_slash});
      }
      if (r + 1 < rows && even) lat.edges_.push_back({v, v + cols, EdgeKind::vertical});
    }
  }
  return lat;
}

int HoneycombLattice::sublattice(std::size_t v) const {
  const auto [r, c] = coordinates(v);
  return static_cast<int>((r + c) % 2);
}

std::vector<HoneycombEdge> HoneycombLattice::edges_of(EdgeKind kind) const {
  std::vector<HoneycombEdge> out;
  for (const auto& e : edges_) {
    if (e.kind == kind) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> HoneycombLattice::flip_set(EdgeKind kind) const {
  const std::size_t n = vertex_count();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& e : edges_) {
    const int parity = e.kind == kind ? 0 : 1;
    adj[e.a].push_back({e.b, parity});
    adj[e.b].push_back({e.a, parity});
  }
  std::vector<int> color(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop();
      for (const auto& [w, parity] : adj[v]) {
        const int want = color[v] ^ parity;
        if (color[w] < 0) {
          color[w] = want;
          todo.push(w);
        } else if (color[w] != want) {
          throw ConfigError("lattice admits no alternating " + edge_kind_name(kind) +
                            " coloring");
        }
      }
    }
  }
  const auto same = edges_of(kind);
  if (same.empty()) throw ConfigError("lattice has no " + edge_kind_name(kind) + " edges");
  const int chosen = color[same.front().a];
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == chosen) out.push_back(v);
  }
  return out;
}

std::pair<OperatorSum, OperatorSum> honeycomb_hamiltonians(const HoneycombLattice& lat,
                                                           double j) {
  const std::size_t n = lat.vertex_count();
  OperatorSum input(n), target(n);
  for (const auto& e : lat.edges()) {
    input = input + pair_term(n, Pauli::Z, e.a, e.b, j);
    const Pauli p = e.kind == EdgeKind::forward_slash ? Pauli::X
                    : e.kind == EdgeKind::back_slash  ? Pauli::Y
                                                      : Pauli::Z;
    target = target + pair_term(n, p, e.a, e.b, j);
  }
  return {input, target};
}

GeneratorSpec transformer_generator(std::size_t n_qubits,
                                    const std::vector<std::size_t>& qubits,
                                    std::string label) {
  const double s = 1.0 / std::sqrt(3.0);
  OperatorSum axis(n_qubits);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) axis = axis + s * sum_over(n_qubits, p, qubits);
  return GeneratorSpec::from_axis(std::move(label), axis, 2.0 * std::numbers::pi / 3.0);
}

std::vector<GeneratorSpec> honeycomb_group_generators(const HoneycombLattice& lat) {
  const std::size_t n = lat.vertex_count();
  std::vector<std::size_t> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  return {
      GeneratorSpec::from_axis("rho_X", sum_over(n, Pauli::X, lat.flip_set(EdgeKind::forward_slash)),
                               kHalfPi),
      GeneratorSpec::from_axis("tau_X", sum_over(n, Pauli::X, lat.flip_set(EdgeKind::back_slash)),
                               kHalfPi),
      transformer_generator(n, all, "R"),
  };
}

namespace {

std::size_t generator_named(const GroupClosure& g, const std::string& label) {
  const auto labels = g.generator_labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return g.generator_element(k);
  }
  throw ConfigError("group has no generator '" + label + "'");
}

}  // namespace

WeightAssignment honeycomb_partial_weights(const GroupClosure& g, EdgeKind kind) {
  const std::size_t rho = generator_named(g, "rho_X");
  const std::size_t tau = generator_named(g, "tau_X");
  const std::size_t r = generator_named(g, "R");
  const std::size_t r2 = g.product(r, r);
  std::pair<std::size_t, std::size_t> pick;
  switch (kind) {
    case EdgeKind::forward_slash: pick = {r, g.product(rho, r)}; break;
    case EdgeKind::back_slash: pick = {r2, g.product(tau, r2)}; break;
    case EdgeKind::vertical: pick = {g.identity_index(), g.product(rho, tau)}; break;
  }
  std::vector<double> w(g.order(), 0.0);
  w[pick.first] += 0.5;
  w[pick.second] += 0.5;
  return WeightAssignment::from_values(std::move(w), "honeycomb");
}

WeightAssignment honeycomb_weights(const GroupClosure& g) {
  std::vector<double> w(g.order(), 0.0);
  for (EdgeKind k : {EdgeKind::forward_slash, EdgeKind::back_slash, EdgeKind::vertical}) {
    const auto part = honeycomb_partial_weights(g, k);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += part.weights[i];
  }
  return WeightAssignment::from_values(std::move(w), "honeycomb");
}

std::vector<std::string> group_preset_names() {
  return {"g1", "g_odd", "g_gl", "g_dephasing", "pauli2", "honeycomb"};
}

std::vector<GeneratorSpec> group_generators(std::string_view name, std::size_t n) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ConfigError("group '" + std::string(name) + "' " + what);
  };
  std::vector<std::size_t> all(n), even;
  for (std::size_t q = 0; q < n; ++q) {
    all[q] = q;
    if (q % 2 == 0) even.push_back(q);
  }
  if (name == "g1") {
    need(n >= 1, "needs at least one qubit");
    return {GeneratorSpec::from_axis("X0", single(n, Pauli::X, 0), kHalfPi),
            GeneratorSpec::from_axis("Z0", single(n, Pauli::Z, 0), kHalfPi)};
  }
  if (name == "g_odd") {
    need(n >= 1, "needs at least one qubit");
    return {GeneratorSpec::from_axis("X_odd", sum_over(n, Pauli::X, even), kHalfPi),
            GeneratorSpec::from_axis("Z_odd", sum_over(n, Pauli::Z, even), kHalfPi)};
  }
  if (name == "g_gl") {
    need(n >= 1, "needs at least one qubit");
    return {GeneratorSpec::from_axis("X_all", sum_over(n, Pauli::X, all), kHalfPi),
            GeneratorSpec::from_axis("Z_all", sum_over(n, Pauli::Z, all), kHalfPi)};
  }
  if (name == "g_dephasing") {
    need(n == 2, "is defined on two qubits");
    return {GeneratorSpec::from_axis("X0", single(2, Pauli::X, 0), kHalfPi),
            GeneratorSpec::from_axis("Z0", single(2, Pauli::Z, 0), kHalfPi),
            GeneratorSpec::from_axis("Z0+Z1", sum_over(2, Pauli::Z, {0, 1}), kHalfPi)};
  }
  if (name == "pauli2") {
    need(n == 2, "is defined on two qubits");
    return {GeneratorSpec::from_axis("X0+X1", sum_over(2, Pauli::X, {0, 1}), kHalfPi),
            GeneratorSpec::from_axis("Z0+Z1", sum_over(2, Pauli::Z, {0, 1}), kHalfPi),
            GeneratorSpec::from_axis("X0", single(2, Pauli::X, 0), kHalfPi),
            GeneratorSpec::from_axis("Z0", single(2, Pauli::Z, 0), kHalfPi)};
  }
  if (name == "honeycomb") {
    const auto lat = HoneycombLattice::plaquette();
    need(n == lat.vertex_count(), "is defined on the 6-qubit plaquette");
    return honeycomb_group_generators(lat);
  }
  throw ConfigError("unknown group preset '" + std::string(name) + "'");
}

PresetGroup group_preset(std::string_view name, std::size_t n) {
  auto gens = group_generators(name, n);
  GroupClosure g = close_group(gens);
  return PresetGroup{std::string(name), std::move(gens), std::move(g)};
}

OpenSystemModel open_chain_model(std::size_t n_s, std::string_view axes,
                                 std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto random_bath_op = [&] {
    double c[3];
    double norm = 0.0;
    for (double& x : c) {
      x = normal(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    OperatorSum b(1);
    const Pauli letters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int k = 0; k < 3; ++k) b = b + single(1, letters[k], 0, scale * c[k] / norm);
    return b;
  };

  OperatorSum bath = random_bath_op();
  std::vector<std::pair<OperatorSum, OperatorSum>> couplings;
  for (char a : axes) {
    if (a == ',' || a == ' ') continue;
    Pauli p;
    switch (a) {
      case 'x': case 'X': p = Pauli::X; break;
      case 'y': case 'Y': p = Pauli::Y; break;
      case 'z': case 'Z': p = Pauli::Z; break;
      default: throw ConfigError(std::string("unknown coupling axis '") + a + "'");
    }
    for (std::size_t q = 0; q < n_s; ++q) {
      couplings.emplace_back(single(n_s, p, q), random_bath_op());
    }
  }
  return OpenSystemModel(heisenberg_chain(n_s, 1.0), std::move(bath), std::move(couplings), seed);
}

}  // namespace eulersim
