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

#include "eulersim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eulersim/errors.hpp"

namespace eulersim {

std::shared_ptr<const ControlSystem> ControlSystem::build(
    std::string name, std::span<const GeneratorSpec> generators,
    const PulseShape& base_shape, std::size_t max_order) {
  auto cs = std::make_shared<ControlSystem>();
  cs->name = std::move(name);
  cs->group = close_group(generators, max_order);
  for (const auto& gen : generators) {
    cs->pulses.push_back(pulse_axes_for_generator(gen, base_shape));
  }
  cs->graph = build_cayley_graph(cs->group);
  cs->cycle = eulerian_cycle(cs->graph);
  return cs;
}

std::string mode_name(ScheduleMode mode) {
  switch (mode) {
    case ScheduleMode::bb: return "bb";
    case ScheduleMode::eulerian: return "eulerian";
    case ScheduleMode::symmetric: return "symmetric";
  }
  return "unknown";
}

ScheduleMode mode_from_name(std::string_view name) {
  if (name == "bb") return ScheduleMode::bb;
  if (name == "eulerian") return ScheduleMode::eulerian;
  if (name == "symmetric") return ScheduleMode::symmetric;
  throw ConfigError("unknown schedule mode '" + std::string(name) + "'");
}

namespace {

void check_inputs(const std::shared_ptr<const ControlSystem>& controls,
                  const WeightAssignment& w, double t_sim) {
  if (!controls) throw ConfigError("schedule needs a control system");
  if (w.order() != controls->group.order()) {
    throw DimensionMismatchError("weights and control group have different orders");
  }
  if (!(t_sim > 0.0) || !std::isfinite(t_sim)) {
    throw ConfigError("simulation interval must be positive");
  }
}

double ramp_duration(const ControlSystem& cs) {
  if (cs.pulses.empty()) throw ConfigError("control system has no pulses");
  const double d = cs.pulses.front().duration();
  for (const auto& p : cs.pulses) {
    if (p.duration() != d) throw ConfigError("generator pulses differ in duration");
  }
  return d;
}

class Timeline {
 public:
  void ramp(std::size_t gen, std::size_t base, std::size_t frame, double d, bool reversed) {
    Segment s;
    s.kind = SegmentKind::ramp;
    s.generator = gen;
    s.base_element = base;
    s.frame_element = frame;
    s.reversed = reversed;
    push(s, d);
  }
  void coast(std::size_t frame, double d) {
    Segment s;
    s.kind = SegmentKind::coast;
    s.base_element = frame;
    s.frame_element = frame;
    push(s, d);
  }
  std::vector<Segment> take() { return std::move(segments_); }

 private:
  void push(Segment s, double d) {
    s.start = now_;
    s.duration = d;
    now_ += d;
    segments_.push_back(s);
  }
  double now_ = 0.0;
  std::vector<Segment> segments_;
};

Schedule eulerian_like(ScheduleMode mode, std::shared_ptr<const ControlSystem> controls,
                       const WeightAssignment& w, double t_sim) {
  check_inputs(controls, w, t_sim);
  const ControlSystem& cs = *controls;
  const double delta = ramp_duration(cs);
  const auto& edges = cs.cycle.edges;
  const double per_visit = t_sim / static_cast<double>(cs.group.generator_count());
  const double coast_scale = mode == ScheduleMode::symmetric ? 0.5 : 1.0;

  Timeline line;
  for (const auto& e : edges) {
    line.ramp(e.generator, e.from, e.to, delta, false);
    line.coast(e.to, coast_scale * w.weights[e.to] * per_visit);
  }
  if (mode == ScheduleMode::symmetric) {
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      line.coast(it->to, 0.5 * w.weights[it->to] * per_visit);
      line.ramp(it->generator, it->from, it->from, delta, true);
    }
  }

  Schedule s;
  s.mode = mode;
  s.controls = std::move(controls);
  s.weights = w;
  s.segments = line.take();
  s.sim_interval = t_sim;
  s.delta = delta;
  const double n = static_cast<double>(edges.size());
  const double ramps = mode == ScheduleMode::symmetric ? 2.0 * n : n;
  s.cycle_time = ramps * delta + w.total * t_sim;
  return s;
}

}  // namespace

Schedule build_bb_schedule(std::shared_ptr<const ControlSystem> controls,
                           const WeightAssignment& w, double t_sim) {
  check_inputs(controls, w, t_sim);
  if (w.nonzero_count() == 0) {
    throw ConfigError("bang-bang schedule needs at least one nonzero weight");
  }
  Timeline line;
  for (std::size_t g = 0; g < w.order(); ++g) {
    if (w.weights[g] > 0.0) line.coast(g, w.weights[g] * t_sim);
  }
  Schedule s;
  s.mode = ScheduleMode::bb;
  s.controls = std::move(controls);
  s.weights = w;
  s.segments = line.take();
  s.sim_interval = t_sim;
  s.delta = 0.0;
  s.cycle_time = w.total * t_sim;
  return s;
}

Schedule build_eulerian_schedule(std::shared_ptr<const ControlSystem> controls,
                                 const WeightAssignment& w, double t_sim) {
  return eulerian_like(ScheduleMode::eulerian, std::move(controls), w, t_sim);
}

Schedule build_symmetric_schedule(std::shared_ptr<const ControlSystem> controls,
                                  const WeightAssignment& w, double t_sim) {
  return eulerian_like(ScheduleMode::symmetric, std::move(controls), w, t_sim);
}

Schedule build_schedule(ScheduleMode mode, std::shared_ptr<const ControlSystem> controls,
                        const WeightAssignment& w, double t_sim) {
  switch (mode) {
    case ScheduleMode::bb: return build_bb_schedule(std::move(controls), w, t_sim);
    case ScheduleMode::eulerian: return build_eulerian_schedule(std::move(controls), w, t_sim);
    case ScheduleMode::symmetric: return build_symmetric_schedule(std::move(controls), w, t_sim);
  }
  throw ConfigError("unknown schedule mode");
}

std::size_t segment_at(const Schedule& s, double t) {
  if (s.segments.empty()) throw ConfigError("schedule has no segments");
  const double slack = 1e-12 * std::max(1.0, s.cycle_time);
  if (t < -slack || t > s.cycle_time + slack) {
    std::ostringstream msg;
    msg << "time " << t << " outside the control cycle [0, " << s.cycle_time << "]";
    throw ConfigError(msg.str());
  }
  std::size_t found = 0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (seg.duration == 0.0) continue;
    found = i;
    if (t < seg.end()) break;
  }
  return found;
}

DenseOperator control_propagator_at(const Schedule& s, double t) {
  const std::size_t idx = segment_at(s, t);
  const ControlSystem& cs = *s.controls;
  if (s.mode == ScheduleMode::bb) {
    const double slack = 1e-12 * std::max(1.0, s.cycle_time);
    if (t <= slack || t >= s.cycle_time - slack) {
      return DenseOperator::identity(cs.group.n_qubits());
    }
  }
  const Segment& seg = s.segments[idx];
  const DenseOperator& base = cs.group.element(seg.base_element);
  if (seg.kind == SegmentKind::coast) return base;
  const double delta = std::clamp(t - seg.start, 0.0, seg.duration);
  const GeneratorPulse& p = cs.pulses.at(*seg.generator);
  const DenseOperator u = seg.reversed ? p.reversed_propagator(delta) : p.propagator(delta);
  return u * base;
}

std::string schedule_violation(const Schedule& s, double rel_tol) {
  if (!s.controls) return "schedule has no control system";
  const ControlSystem& cs = *s.controls;
  const GroupClosure& g = cs.group;
  const double tol = rel_tol * std::max(1.0, s.cycle_time);
  std::ostringstream msg;
  double now = 0.0;
  std::size_t frame = g.identity_index();
  double ramps = 0.0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (std::abs(seg.start - now) > tol) {
      msg << "segment " << i << " starts at " << seg.start << ", expected " << now;
      return msg.str();
    }
    if (seg.duration < 0.0) {
      msg << "segment " << i << " has negative duration";
      return msg.str();
    }
    if (seg.frame_element >= g.order() || seg.base_element >= g.order()) {
      msg << "segment " << i << " refers to a missing group element";
      return msg.str();
    }
    now = seg.end();
    if (seg.kind == SegmentKind::coast) {
      if (s.mode != ScheduleMode::bb && seg.frame_element != frame) {
        msg << "coast " << i << " does not hold the current frame";
        return msg.str();
      }
      frame = seg.frame_element;
      continue;
    }
    if (s.mode == ScheduleMode::bb) return "bang-bang schedule contains a ramp";
    if (!seg.generator || *seg.generator >= cs.pulses.size()) {
      msg << "ramp " << i << " has no valid generator";
      return msg.str();
    }
    if (std::abs(seg.duration - s.delta) > tol) {
      msg << "ramp " << i << " lasts " << seg.duration << ", expected " << s.delta;
      return msg.str();
    }
    ramps += 1.0;
    const std::size_t moved = g.product(g.generator_element(*seg.generator), seg.base_element);
    const bool chains = seg.reversed
                            ? (moved == frame && seg.frame_element == seg.base_element)
                            : (seg.base_element == frame && seg.frame_element == moved);
    if (!chains) {
      msg << "ramp " << i << " does not move the frame along its generator";
      return msg.str();
    }
    frame = seg.frame_element;
  }
  if (s.mode != ScheduleMode::bb && frame != g.identity_index()) {
    return "control cycle does not return to the identity";
  }
  if (std::abs(now - s.cycle_time) > tol) {
    msg << "segments end at " << now << " but the cycle time is " << s.cycle_time;
    return msg.str();
  }
  const double expected = ramps * s.delta + s.weights.total * s.sim_interval;
  if (std::abs(expected - s.cycle_time) > tol) {
    msg << "cycle time " << s.cycle_time << " differs from ramps*delta + W*T_sim = "
        << expected;
    return msg.str();
  }
  if (s.weights.order() != g.order()) return "weights do not match the control group";
  std::vector<double> coast(g.order(), 0.0);
  for (const auto& seg : s.segments) {
    if (seg.kind == SegmentKind::coast) coast[seg.frame_element] += seg.duration;
  }
  for (std::size_t e = 0; e < g.order(); ++e) {
    const double want = s.weights.weights[e] * s.sim_interval;
    if (std::abs(coast[e] - want) > tol) {
      msg << "frame " << g.element_labels()[e] << " is held for " << coast[e]
          << ", its weight asks for " << want;
      return msg.str();
    }
  }
  return "";
}

}  // namespace eulersim
