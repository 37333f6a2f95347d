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

#include "eulersim/serialization.hpp"

#include <cmath>
#include <fstream>

#include "eulersim/errors.hpp"

namespace eulersim {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::size_t element_by_label(const GroupClosure& g, const std::string& label) {
  if (auto k = g.find_label(label)) return *k;
  throw ConfigError("group has no element labelled '" + label + "'");
}

std::size_t generator_by_label(const ControlSystem& cs, const std::string& label) {
  for (std::size_t k = 0; k < cs.pulses.size(); ++k) {
    if (cs.pulses[k].label() == label) return k;
  }
  throw ConfigError("group has no generator labelled '" + label + "'");
}

}  // namespace

json operator_to_json(const OperatorSum& op) {
  json terms = json::array();
  for (const auto& t : op.terms()) {
    json word = json::object();
    for (const auto& [q, p] : t.word.letters()) {
      word[std::to_string(q)] = std::string(1, pauli_char(p));
    }
    terms.push_back({{"coeff", t.coeff}, {"word", word}});
  }
  return {{"n_qubits", op.n_qubits()}, {"terms", terms}};
}

OperatorSum operator_from_json(const json& j) {
  const auto n = field<std::size_t>(j, "n_qubits");
  std::vector<PauliTerm> terms;
  for (const auto& t : field<json>(j, "terms")) {
    const double c = field<double>(t, "coeff");
    const json& w = t.at("word");
    if (w.is_string()) {
      terms.push_back({c, PauliWord::parse(n, w.get<std::string>())});
      continue;
    }
    std::map<std::size_t, Pauli> letters;
    for (const auto& [key, value] : w.items()) {
      std::size_t q;
      try {
        q = std::stoul(key);
      } catch (const std::exception&) {
        throw ConfigError("bad qubit index '" + key + "'");
      }
      const auto s = value.get<std::string>();
      if (s.size() != 1) throw ConfigError("bad Pauli letter '" + s + "'");
      if (s == "I") continue;
      letters[q] = pauli_from_char(s[0]);
    }
    terms.push_back({c, PauliWord(n, std::move(letters))});
  }
  return OperatorSum(n, std::move(terms));
}

json weights_to_json(const WeightAssignment& w, const GroupClosure& g) {
  if (w.order() != g.order()) throw DimensionMismatchError("weights do not match the group");
  json values = json::object();
  for (std::size_t i = 0; i < w.order(); ++i) values[g.element_labels()[i]] = w.weights[i];
  return {{"group", w.group_name}, {"weights", values}, {"W", w.total}};
}

WeightAssignment weights_from_json(const json& j, const GroupClosure& g) {
  std::vector<double> w(g.order(), 0.0);
  const json values = field<json>(j, "weights");
  for (const auto& [label, value] : values.items()) {
    w[element_by_label(g, label)] = value.get<double>();
  }
  return WeightAssignment::from_values(std::move(w), j.value("group", std::string()));
}

json closure_to_json(const ControlSystem& cs) {
  json cycle = json::array();
  for (const auto& e : cs.cycle.edges) cycle.push_back(cs.pulses[e.generator].label());
  return {{"name", cs.name},
          {"n_qubits", cs.group.n_qubits()},
          {"order", cs.group.order()},
          {"generators", cs.group.generator_labels()},
          {"elements", cs.group.element_labels()},
          {"euler_cycle", cycle}};
}

json lattice_to_json(const HoneycombLattice& lat) {
  json vertices = json::array();
  for (std::size_t v = 0; v < lat.vertex_count(); ++v) {
    const auto [r, c] = lat.coordinates(v);
    vertices.push_back({{"index", v}, {"row", r}, {"col", c}, {"sublattice", lat.sublattice(v)}});
  }
  json edges = json::array();
  for (const auto& e : lat.edges()) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", edge_kind_name(e.kind)}});
  }
  return {{"rows", lat.rows()}, {"cols", lat.cols()}, {"vertices", vertices}, {"edges", edges}};
}

json shape_to_json(const PulseShape& shape) {
  json j = {{"kind", shape.name()}, {"duration", shape.duration()}, {"area", shape.area()}};
  if (shape.kind() == ShapeKind::tabulated) {
    json samples = json::array();
    for (const auto& [t, f] : shape.samples()) samples.push_back({t, f});
    j["samples"] = samples;
  }
  return j;
}

PulseShape shape_from_json(const json& j) {
  const auto kind = shape_kind_from_name(field<std::string>(j, "kind"));
  if (kind == ShapeKind::tabulated) {
    std::vector<std::pair<double, double>> samples;
    for (const auto& s : field<json>(j, "samples")) {
      samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
    }
    return PulseShape::tabulated(std::move(samples));
  }
  return PulseShape::named(shape_name(kind), field<double>(j, "duration"),
                           j.value("area", 1.0));
}

json schedule_to_json(const ScheduleDocument& doc) {
  const Schedule& s = doc.schedule;
  const ControlSystem& cs = *s.controls;
  const auto& labels = cs.group.element_labels();
  json segments = json::array();
  for (const auto& seg : s.segments) {
    json j = {{"kind", seg.kind == SegmentKind::ramp ? "ramp" : "coast"},
              {"start", seg.start},
              {"duration", seg.duration},
              {"frame", labels[seg.frame_element]}};
    if (seg.kind == SegmentKind::ramp) {
      j["generator"] = cs.pulses[*seg.generator].label();
      j["base"] = labels[seg.base_element];
      j["reversed"] = seg.reversed;
    }
    segments.push_back(std::move(j));
  }
  return {{"format_version", kScheduleFormatVersion},
          {"mode", mode_name(s.mode)},
          {"cycle_time", s.cycle_time},
          {"sim_interval", s.sim_interval},
          {"delta", s.delta},
          {"shape", shape_to_json(cs.pulses.front().shape().with_area(1.0))},
          {"group", {{"preset", cs.name},
                     {"n_qubits", cs.group.n_qubits()},
                     {"generators", cs.group.generator_labels()}}},
          {"hamiltonian", operator_to_json(doc.hamiltonian)},
          {"target", operator_to_json(doc.target)},
          {"weights", weights_to_json(s.weights, cs.group)},
          {"segments", segments}};
}

ScheduleDocument schedule_from_json(const json& j) {
  const int version = field<int>(j, "format_version");
  if (version != kScheduleFormatVersion) {
    throw ConfigError("unsupported schedule format_version " + std::to_string(version));
  }
  const json& group = field<json>(j, "group");
  const auto preset = field<std::string>(group, "preset");
  const auto n = field<std::size_t>(group, "n_qubits");
  const auto gens = group_generators(preset, n);
  auto controls = ControlSystem::build(preset, gens, shape_from_json(field<json>(j, "shape")));
  if (group.contains("generators") &&
      group.at("generators").get<std::vector<std::string>>() != controls->group.generator_labels()) {
    throw ConfigError("schedule generator labels do not match preset '" + preset + "'");
  }

  Schedule s;
  s.mode = mode_from_name(field<std::string>(j, "mode"));
  s.controls = controls;
  s.cycle_time = field<double>(j, "cycle_time");
  s.sim_interval = field<double>(j, "sim_interval");
  s.delta = field<double>(j, "delta");
  s.weights = weights_from_json(field<json>(j, "weights"), controls->group);

  const json& segs = field<json>(j, "segments");
  const double tol = 1e-12 * std::max(1.0, s.cycle_time);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const json& js = segs[i];
    Segment seg;
    const auto kind = field<std::string>(js, "kind");
    if (kind == "ramp") seg.kind = SegmentKind::ramp;
    else if (kind == "coast") seg.kind = SegmentKind::coast;
    else throw ConfigError("unknown segment kind '" + kind + "'");
    seg.start = field<double>(js, "start");
    const double next = i + 1 < segs.size() ? field<double>(segs[i + 1], "start") : s.cycle_time;
    const double derived = next - seg.start;
    seg.duration = derived;
    if (js.contains("duration")) {
      const double stated = field<double>(js, "duration");
      if (std::abs(stated - derived) > tol) {
        throw ConfigError("segment " + std::to_string(i) + " duration " + std::to_string(stated) +
                          " disagrees with its start times (" + std::to_string(derived) + ")");
      }
      seg.duration = stated;
    }
    seg.frame_element = element_by_label(controls->group, field<std::string>(js, "frame"));
    seg.base_element = seg.frame_element;
    if (seg.kind == SegmentKind::ramp) {
      seg.generator = generator_by_label(*controls, field<std::string>(js, "generator"));
      seg.base_element = element_by_label(controls->group, field<std::string>(js, "base"));
      seg.reversed = js.value("reversed", false);
    }
    s.segments.push_back(seg);
  }
  return ScheduleDocument{std::move(s), operator_from_json(field<json>(j, "hamiltonian")),
                          operator_from_json(field<json>(j, "target"))};
}

json average_report_to_json(const AverageReport& r) {
  return {{"residual_norm", r.residual_norm()},
          {"h_bar_0", operator_to_json(pauli_coefficients(r.h_bar_0))},
          {"target_scaled", operator_to_json(pauli_coefficients(r.target_scaled))},
          {"decoupling_residuals", r.decoupling_residuals},
          {"magnus_estimate", {{"value", r.magnus.estimate},
                               {"converged", r.magnus.converged},
                               {"prefactor_unknown", r.magnus.prefactor_unknown}}}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace eulersim
