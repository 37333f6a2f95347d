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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulersim/control_group.hpp"
#include "eulersim/pauli_algebra.hpp"

namespace eulersim {

enum class ShapeKind { sine_squared, triangle, constant, tabulated };

/// "sine2", "triangle", "constant", "tabulated".
std::string shape_name(ShapeKind kind);
/// Accepts the names above plus "sine_squared". Throws ConfigError.
ShapeKind shape_kind_from_name(std::string_view name);

/**
 * @brief Scalar envelope f(t) on [0, duration] with a fixed area.
 *
 * Built-in shapes have closed-form accumulated area F(t). Tabulated shapes
 * interpolate linearly between samples, so F is exact for them too.
 */
class PulseShape {
 public:
  /// f(t) = (2A/D) sin^2(pi t/D).
  static PulseShape sine_squared(double duration, double area);
  /// Symmetric triangle peaking at 2A/D at t = D/2.
  static PulseShape triangle(double duration, double area);
  /// f(t) = A/D. Discontinuous at both ends.
  static PulseShape constant(double duration, double area);
  /// Piecewise-linear through (t, f) samples; t must start at 0 and
  /// increase strictly. The area is the trapezoid sum.
  static PulseShape tabulated(std::vector<std::pair<double, double>> samples);
  /// Reads "t,f" rows (a non-numeric header line is skipped).
  static PulseShape from_csv(const std::string& path);
  /// Built-in shape by name with the given duration and area.
  static PulseShape named(std::string_view name, double duration, double area);

  ShapeKind kind() const { return kind_; }
  std::string name() const { return shape_name(kind_); }
  double duration() const { return duration_; }
  double area() const { return area_; }
  double amplitude_max() const;
  /// f(0) = f(D) = 0.
  bool is_continuous() const;
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  double value(double t) const;
  /// F(t) = integral of f over [0, t].
  double accumulated(double t) const;

  /// Same profile rescaled in amplitude to the given area.
  PulseShape with_area(double area) const;
  /// Same profile stretched in time, area preserved.
  PulseShape with_duration(double duration) const;

 private:
  PulseShape(ShapeKind kind, double duration, double area)
      : kind_(kind), duration_(duration), area_(area) {}

  ShapeKind kind_;
  double duration_;
  double area_;
  std::vector<std::pair<double, double>> samples_;
};

/// exp(-i F(delta) axis); exact because the axis is fixed during the pulse.
/// Throws ConfigError for delta outside [0, D].
DenseOperator segment_propagator(const PulseShape& shape,
                                 const OperatorSum& axis, double delta);

/**
 * @brief A generator realized by driving one fixed axis with a shaped
 * pulse, u(delta) = exp(-i F(delta) axis).
 */
class GeneratorPulse {
 public:
  GeneratorPulse(std::string label, OperatorSum axis, PulseShape shape);

  const std::string& label() const { return label_; }
  const OperatorSum& axis() const { return axis_; }
  const DenseOperator& axis_dense() const { return axis_dense_; }
  const PulseShape& shape() const { return shape_; }
  double duration() const { return shape_.duration(); }

  DenseOperator propagator(double delta) const;
  /// u(D - delta): the time-reversed pulse, driven by -f(D - delta) axis.
  DenseOperator reversed_propagator(double delta) const;

 private:
  std::string label_;
  OperatorSum axis_;
  DenseOperator axis_dense_;
  PulseShape shape_;
  HermitianExponential exp_;
};

/// The pulse realizing `gen`: its control axis driven by `base` rescaled to
/// the generator's target angle. Throws ConfigError when the end-of-pulse
/// propagator differs from gen.unitary (up to phase) by more than `tol`.
GeneratorPulse pulse_axes_for_generator(const GeneratorSpec& gen,
                                        const PulseShape& base,
                                        double tol = 1e-9);

}  // namespace eulersim
