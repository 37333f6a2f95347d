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

#include "eulersim/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "eulersim/errors.hpp"

namespace eulersim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_duration(double duration) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw ConfigError("pulse duration must be positive and finite");
  }
}

// Clamps t into [0, D], tolerating rounding at the ends.
double clamp_time(double t, double duration) {
  const double slack = 1e-12 * duration;
  if (t < -slack || t > duration + slack) {
    std::ostringstream msg;
    msg << "time " << t << " outside pulse interval [0, " << duration << "]";
    throw ConfigError(msg.str());
  }
  return std::clamp(t, 0.0, duration);
}

double trapezoid_area(const std::vector<std::pair<double, double>>& s) {
  double area = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    area += 0.5 * (s[i].first - s[i - 1].first) * (s[i].second + s[i - 1].second);
  }
  return area;
}

}  // namespace

std::string shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::sine_squared: return "sine2";
    case ShapeKind::triangle: return "triangle";
    case ShapeKind::constant: return "constant";
    case ShapeKind::tabulated: return "tabulated";
  }
  return "unknown";
}

ShapeKind shape_kind_from_name(std::string_view name) {
  if (name == "sine2" || name == "sine_squared") return ShapeKind::sine_squared;
  if (name == "triangle") return ShapeKind::triangle;
  if (name == "constant") return ShapeKind::constant;
  if (name == "tabulated") return ShapeKind::tabulated;
  throw ConfigError("unknown pulse shape '" + std::string(name) + "'");
}

PulseShape PulseShape::sine_squared(double duration, double area) {
  check_duration(duration);
  return PulseShape(ShapeKind::sine_squared, duration, area);
}

PulseShape PulseShape::triangle(double duration, double area) {
  check_duration(duration);
  return PulseShape(ShapeKind::triangle, duration, area);
}

PulseShape PulseShape::constant(double duration, double area) {
  check_duration(duration);
  return PulseShape(ShapeKind::constant, duration, area);
}

PulseShape PulseShape::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw ConfigError("tabulated pulse needs at least two samples");
  if (samples.front().first != 0.0) throw ConfigError("tabulated pulse must start at t = 0");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first)) {
      throw ConfigError("tabulated pulse times must increase strictly");
    }
  }
  for (const auto& [t, f] : samples) {
    if (!std::isfinite(t) || !std::isfinite(f)) {
      throw ConfigError("tabulated pulse has a non-finite sample");
    }
  }
  PulseShape shape(ShapeKind::tabulated, samples.back().first, trapezoid_area(samples));
  shape.samples_ = std::move(samples);
  return shape;
}

PulseShape PulseShape::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pulse file " + path);
  std::vector<std::pair<double, double>> samples;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, f;
    if (!(row >> t >> f)) {
      if (first) {
        first = false;
        continue;
      }
      throw ConfigError("malformed row in pulse file " + path + ": " + line);
    }
    first = false;
    samples.emplace_back(t, f);
  }
  return tabulated(std::move(samples));
}

PulseShape PulseShape::named(std::string_view name, double duration, double area) {
  switch (shape_kind_from_name(name)) {
    case ShapeKind::sine_squared: return sine_squared(duration, area);
    case ShapeKind::triangle: return triangle(duration, area);
    case ShapeKind::constant: return constant(duration, area);
    case ShapeKind::tabulated: break;
  }
  throw ConfigError("tabulated shapes are loaded from a CSV file");
}

double PulseShape::amplitude_max() const {
  switch (kind_) {
    case ShapeKind::sine_squared:
    case ShapeKind::triangle: return 2.0 * std::abs(area_) / duration_;
    case ShapeKind::constant: return std::abs(area_) / duration_;
    case ShapeKind::tabulated: {
      double m = 0.0;
      for (const auto& s : samples_) m = std::max(m, std::abs(s.second));
      return m;
    }
  }
  return 0.0;
}

bool PulseShape::is_continuous() const {
  switch (kind_) {
    case ShapeKind::sine_squared:
    case ShapeKind::triangle: return true;
    case ShapeKind::constant: return area_ == 0.0;
    case ShapeKind::tabulated:
      return samples_.front().second == 0.0 && samples_.back().second == 0.0;
  }
  return false;
}

double PulseShape::value(double t) const {
  t = clamp_time(t, duration_);
  const double d = duration_;
  switch (kind_) {
    case ShapeKind::sine_squared: {
      const double s = std::sin(kPi * t / d);
      return 2.0 * area_ / d * s * s;
    }
    case ShapeKind::triangle: {
      const double slope = 4.0 * area_ / (d * d);
      return slope * std::min(t, d - t);
    }
    case ShapeKind::constant: return area_ / d;
    case ShapeKind::tabulated: {
      auto hi = std::upper_bound(samples_.begin(), samples_.end(), t,
                                 [](double x, const auto& s) { return x < s.first; });
      if (hi == samples_.end()) return samples_.back().second;
      auto lo = std::prev(hi);
      const double r = (t - lo->first) / (hi->first - lo->first);
      return lo->second + r * (hi->second - lo->second);
    }
  }
  return 0.0;
}

double PulseShape::accumulated(double t) const {
  t = clamp_time(t, duration_);
  const double d = duration_;
  switch (kind_) {
    case ShapeKind::sine_squared:
      return area_ / d * (t - d / (2.0 * kPi) * std::sin(2.0 * kPi * t / d));
    case ShapeKind::triangle:
      if (t <= 0.5 * d) return 2.0 * area_ * t * t / (d * d);
      return area_ - 2.0 * area_ * (d - t) * (d - t) / (d * d);
    case ShapeKind::constant: return area_ * t / d;
    case ShapeKind::tabulated: {
      double acc = 0.0;
      for (std::size_t i = 1; i < samples_.size(); ++i) {
        const auto& [t0, f0] = samples_[i - 1];
        const auto& [t1, f1] = samples_[i];
        if (t >= t1) {
          acc += 0.5 * (t1 - t0) * (f0 + f1);
          continue;
        }
        const double h = t - t0;
        const double slope = (f1 - f0) / (t1 - t0);
        acc += h * f0 + 0.5 * slope * h * h;
        break;
      }
      return acc;
    }
  }
  return 0.0;
}

PulseShape PulseShape::with_area(double area) const {
  PulseShape out = *this;
  out.area_ = area;
  if (kind_ == ShapeKind::tabulated) {
    if (area_ == 0.0) {
      if (area != 0.0) throw ConfigError("cannot rescale a zero-area tabulated pulse");
      return out;
    }
    const double scale = area / area_;
    for (auto& s : out.samples_) s.second *= scale;
    out.area_ = trapezoid_area(out.samples_);
  }
  return out;
}

PulseShape PulseShape::with_duration(double duration) const {
  check_duration(duration);
  PulseShape out = *this;
  out.duration_ = duration;
  if (kind_ == ShapeKind::tabulated) {
    const double stretch = duration / duration_;
    for (auto& s : out.samples_) {
      s.first *= stretch;
      s.second /= stretch;
    }
    out.samples_.back().first = duration;
    out.area_ = trapezoid_area(out.samples_);
  }
  return out;
}

DenseOperator segment_propagator(const PulseShape& shape, const OperatorSum& axis,
                                 double delta) {
  return matrix_exp(axis, shape.accumulated(delta));
}

GeneratorPulse::GeneratorPulse(std::string label, OperatorSum axis, PulseShape shape)
    : label_(std::move(label)),
      axis_(std::move(axis)),
      axis_dense_(to_dense(axis_)),
      shape_(std::move(shape)),
      exp_(axis_dense_) {}

DenseOperator GeneratorPulse::propagator(double delta) const {
  return exp_.at(shape_.accumulated(delta));
}

DenseOperator GeneratorPulse::reversed_propagator(double delta) const {
  return exp_.at(shape_.accumulated(duration() - clamp_time(delta, duration())));
}

GeneratorPulse pulse_axes_for_generator(const GeneratorSpec& gen,
                                        const PulseShape& base, double tol) {
  GeneratorPulse pulse(gen.label, gen.control_axis, base.with_area(gen.target_angle));
  const DenseOperator end = pulse.propagator(pulse.duration());
  if (!equal_up_to_phase(end, gen.unitary, tol)) {
    throw ConfigError("generator '" + gen.label +
                      "' is not realized by driving its declared axis");
  }
  return pulse;
}

}  // namespace eulersim
