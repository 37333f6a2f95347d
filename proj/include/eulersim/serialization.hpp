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

#include <json.hpp>
#include <memory>
#include <string>

#include "eulersim/averaging.hpp"
#include "eulersim/control_group.hpp"
#include "eulersim/models.hpp"
#include "eulersim/pauli_algebra.hpp"
#include "eulersim/reachability.hpp"
#include "eulersim/scheduler.hpp"

namespace eulersim {

using json = nlohmann::json;

/// Current version written to and required of schedule files.
inline constexpr int kScheduleFormatVersion = 1;

/// {"n_qubits": n, "terms": [{"coeff": c, "word": {"0": "X", "1": "Z"}}]}.
/// On input, "word" may also be a string such as "X0 Z1".
json operator_to_json(const OperatorSum& op);
OperatorSum operator_from_json(const json& j);

/// {"group": name, "weights": {element label: w}, "W": total}.
json weights_to_json(const WeightAssignment& w, const GroupClosure& g);
WeightAssignment weights_from_json(const json& j, const GroupClosure& g);

/// Element count, generator labels, element labels and the Euler cycle as a
/// list of generator labels.
json closure_to_json(const ControlSystem& cs);

json lattice_to_json(const HoneycombLattice& lat);

json shape_to_json(const PulseShape& shape);
PulseShape shape_from_json(const json& j);

/// A schedule with the Hamiltonian it is meant for and the target it
/// simulates. The control system is identified by its group preset name.
struct ScheduleDocument {
  Schedule schedule;
  OperatorSum hamiltonian;
  OperatorSum target;
};

json schedule_to_json(const ScheduleDocument& doc);

/// Rebuilds the control system from the preset name and shape, then the
/// segments. Segment durations are re-derived from consecutive start times;
/// an explicit duration that disagrees is a ConfigError, as is an unknown
/// format_version.
ScheduleDocument schedule_from_json(const json& j);

json average_report_to_json(const AverageReport& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace eulersim
