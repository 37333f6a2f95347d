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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulersim/control_group.hpp"
#include "eulersim/pulses.hpp"
#include "eulersim/reachability.hpp"

namespace eulersim {

/**
 * @brief A group closure together with the pulses realizing its
 * generators, one per generator in declaration order.
 */
struct ControlSystem {
  std::string name;
  GroupClosure group;
  std::vector<GeneratorPulse> pulses;
  CayleyGraph graph;
  EulerCycle cycle;

  /// Closes the group, builds the pulses from `base_shape` and the Euler
  /// cycle.
  static std::shared_ptr<const ControlSystem> build(
      std::string name, std::span<const GeneratorSpec> generators,
      const PulseShape& base_shape, std::size_t max_order = kDefaultMaxGroupOrder);

  std::size_t segment_count() const { return cycle.length(); }
};

enum class ScheduleMode { bb, eulerian, symmetric };

std::string mode_name(ScheduleMode mode);
ScheduleMode mode_from_name(std::string_view name);

enum class SegmentKind { ramp, coast };

struct Segment {
  SegmentKind kind = SegmentKind::coast;
  double start = 0.0;
  double duration = 0.0;
  /// Ramps only: index into ControlSystem::pulses.
  std::optional<std::size_t> generator;
  /// Ramps only: the propagator during the ramp is u(delta) U_base.
  std::size_t base_element = 0;
  /// Frame element in force during a coast and after a ramp.
  std::size_t frame_element = 0;
  /// Symmetric second half: the ramp runs u(D - delta).
  bool reversed = false;

  double end() const { return start + duration; }
};

struct Schedule {
  ScheduleMode mode = ScheduleMode::eulerian;
  std::shared_ptr<const ControlSystem> controls;
  WeightAssignment weights;
  std::vector<Segment> segments;
  double cycle_time = 0.0;
  double sim_interval = 0.0;
  /// Ramp duration; 0 for bang-bang schedules.
  double delta = 0.0;
};

/// One coast per nonzero weight (identity first, then element order),
/// frames switched instantaneously. T_c = W T_sim.
Schedule build_bb_schedule(std::shared_ptr<const ControlSystem> controls,
                           const WeightAssignment& w, double t_sim);

/// Ramp along each Euler-cycle edge, each followed by a coast of
/// w_g T_sim / |Gamma| at the vertex reached. T_c = N D + W T_sim.
Schedule build_eulerian_schedule(std::shared_ptr<const ControlSystem> controls,
                                 const WeightAssignment& w, double t_sim);

/// The Eulerian cycle with halved coasts, followed by its mirror image with
/// time-reversed ramps. T_c = 2 N D + W T_sim and U_c(t) = U_c(T_c - t).
Schedule build_symmetric_schedule(std::shared_ptr<const ControlSystem> controls,
                                  const WeightAssignment& w, double t_sim);

Schedule build_schedule(ScheduleMode mode,
                        std::shared_ptr<const ControlSystem> controls,
                        const WeightAssignment& w, double t_sim);

/// U_c(t): the frame element in force times the partial pulse propagator of
/// the current ramp. Exact up to global phase. Throws ConfigError for t
/// outside [0, T_c].
DenseOperator control_propagator_at(const Schedule& s, double t);

/// Index of the segment containing t (the later one at a boundary, skipping
/// zero-length segments).
std::size_t segment_at(const Schedule& s, double t);

/// Empty string when the schedule is internally consistent (contiguous
/// segments, frames chaining through the group, mode-specific cycle time),
/// otherwise the first problem found.
std::string schedule_violation(const Schedule& s, double rel_tol = 1e-12);

}  // namespace eulersim
