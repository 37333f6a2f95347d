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

#include "eulersim/averaging.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "eulersim/errors.hpp"

namespace eulersim {

namespace {

// The pulse propagator on n >= pulse qubits, as u(delta) (x) I.
class LiftedPulse {
 public:
  LiftedPulse(const GeneratorPulse& pulse, std::size_t n_qubits)
      : pulse_(pulse),
        exp_(to_dense(pulse.axis().embedded(n_qubits, 0))) {}

  Eigen::MatrixXcd at(double delta) const {
    return exp_.at(pulse_.shape().accumulated(delta)).matrix();
  }
  double duration() const { return pulse_.duration(); }

 private:
  const GeneratorPulse& pulse_;
  HermitianExponential exp_;
};

void check_covers(std::size_t control_qubits, std::size_t n) {
  if (n < control_qubits) {
    throw DimensionMismatchError("operator has fewer qubits than the controls act on");
  }
}

Eigen::MatrixXcd toggled(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& h) {
  return u.adjoint() * h * u;
}

// Integral of u^dagger h u over the full pulse.
Eigen::MatrixXcd ramp_integral(const LiftedPulse& p, const Eigen::MatrixXcd& h,
                               const QuadratureOptions& options) {
  return integrate_matrix([&](double d) { return toggled(p.at(d), h); }, 0.0,
                          p.duration(), options);
}

// int_0^D dt int_0^t ds [H(t), H(s)] with H(d) = u(d)^dagger h u(d).
Eigen::MatrixXcd ramp_double_commutator(const LiftedPulse& p, const Eigen::MatrixXcd& h,
                                        const QuadratureOptions& options) {
  auto H = [&](double d) { return toggled(p.at(d), h); };
  return integrate_matrix(
      [&](double t) {
        const Eigen::MatrixXcd ht = H(t);
        const Eigen::MatrixXcd k =
            t == 0.0 ? Eigen::MatrixXcd::Zero(h.rows(), h.cols())
                     : integrate_matrix(H, 0.0, t, options);
        return Eigen::MatrixXcd(ht * k - k * ht);
      },
      0.0, p.duration(), options);
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& a) {
  return 0.5 * (a + a.adjoint());
}

}  // namespace

DenseOperator ramp_average(const GeneratorPulse& pulse, const DenseOperator& h,
                           const QuadratureOptions& options) {
  check_covers(pulse.axis().n_qubits(), h.n_qubits());
  const LiftedPulse p(pulse, h.n_qubits());
  return DenseOperator(h.n_qubits(),
                       ramp_integral(p, h.matrix(), options) / pulse.duration());
}

DenseOperator f_gamma(const OperatorSum& h, std::span<const GeneratorPulse> pulses,
                      const QuadratureOptions& options) {
  if (pulses.empty()) throw ConfigError("F_Gamma needs at least one generator");
  const DenseOperator hd = to_dense(h);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(hd.dim(), hd.dim());
  for (const auto& pulse : pulses) acc += ramp_average(pulse, hd, options).matrix();
  acc /= static_cast<double>(pulses.size());
  return DenseOperator(h.n_qubits(), hermitian_part(acc));
}

double decoupling_residual(const OperatorSum& h, const GroupClosure& g,
                           std::span<const GeneratorPulse> pulses,
                           const QuadratureOptions& options) {
  return frobenius_norm(group_average(f_gamma(h, pulses, options), g));
}

namespace {

// Per-segment pieces shared by the first and second Magnus terms.
class SegmentIntegrals {
 public:
  SegmentIntegrals(const Schedule& s, const OperatorSum& h, const QuadratureOptions& options)
      : s_(s), cs_(*s.controls), n_(h.n_qubits()), h_(to_dense(h).matrix()),
        options_(options) {
    check_covers(cs_.group.n_qubits(), n_);
    frames_.resize(cs_.group.order());
    ramp_.resize(cs_.pulses.size());
    double_.resize(cs_.pulses.size());
  }

  std::size_t dim() const { return static_cast<std::size_t>(h_.rows()); }

  const Eigen::MatrixXcd& frame(std::size_t g) {
    auto& slot = frames_[g];
    if (!slot) slot = lift(cs_.group.element(g), n_).matrix();
    return *slot;
  }

  // Integral of H' over the segment.
  Eigen::MatrixXcd first(const Segment& seg) {
    const Eigen::MatrixXcd& u = frame(seg.base_element);
    if (seg.kind == SegmentKind::coast) return seg.duration * toggled(u, h_);
    return toggled(u, ramp(*seg.generator));
  }

  // int int_{s<t} [H'(t), H'(s)] within the segment.
  Eigen::MatrixXcd inner(const Segment& seg) {
    if (seg.kind == SegmentKind::coast) return Eigen::MatrixXcd::Zero(h_.rows(), h_.cols());
    const Eigen::MatrixXcd j = toggled(frame(seg.base_element), nested(*seg.generator));
    return seg.reversed ? Eigen::MatrixXcd(-j) : j;
  }

 private:
  const Eigen::MatrixXcd& ramp(std::size_t k) {
    auto& slot = ramp_[k];
    if (!slot) slot = ramp_integral(LiftedPulse(cs_.pulses[k], n_), h_, options_);
    return *slot;
  }
  const Eigen::MatrixXcd& nested(std::size_t k) {
    auto& slot = double_[k];
    if (!slot) slot = ramp_double_commutator(LiftedPulse(cs_.pulses[k], n_), h_, options_);
    return *slot;
  }

  const Schedule& s_;
  const ControlSystem& cs_;
  std::size_t n_;
  Eigen::MatrixXcd h_;
  QuadratureOptions options_;
  std::vector<std::optional<Eigen::MatrixXcd>> frames_;
  std::vector<std::optional<Eigen::MatrixXcd>> ramp_;
  std::vector<std::optional<Eigen::MatrixXcd>> double_;
};

void check_schedule(const Schedule& s) {
  if (!s.controls) throw ConfigError("schedule has no control system");
  if (!(s.cycle_time > 0.0)) throw ConfigError("schedule has zero cycle time");
}

}  // namespace

DenseOperator avg_hamiltonian_first(const Schedule& s, const OperatorSum& h,
                                    const QuadratureOptions& options) {
  check_schedule(s);
  SegmentIntegrals parts(s, h, options);
  const auto d = static_cast<Eigen::Index>(parts.dim());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& seg : s.segments) {
    if (seg.duration == 0.0) continue;
    acc += parts.first(seg);
  }
  return DenseOperator(h.n_qubits(), hermitian_part(acc / s.cycle_time));
}

DenseOperator second_order_average(const Schedule& s, const OperatorSum& h,
                                   std::size_t qubit_limit,
                                   const QuadratureOptions& options) {
  check_schedule(s);
  if (h.n_qubits() > qubit_limit) {
    throw DimensionLimitError("second-order average is limited to " +
                              std::to_string(qubit_limit) + " qubits");
  }
  SegmentIntegrals parts(s, h, options);
  const auto d = static_cast<Eigen::Index>(parts.dim());
  Eigen::MatrixXcd prefix = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& seg : s.segments) {
    if (seg.duration == 0.0) continue;
    const Eigen::MatrixXcd a = parts.first(seg);
    acc += a * prefix - prefix * a;
    acc += parts.inner(seg);
    prefix += a;
  }
  const Complex factor(0.0, -1.0 / (2.0 * s.cycle_time));
  return DenseOperator(h.n_qubits(), hermitian_part(factor * acc));
}

MagnusEstimate magnus_error_estimate(const OperatorSum& h, double t, int kappa) {
  if (t < 0.0) throw ConfigError("Magnus estimate needs t >= 0");
  if (kappa < 0) throw ConfigError("Magnus order must be nonnegative");
  const double x = t * operator_norm(to_dense(h));
  MagnusEstimate m;
  m.estimate = std::pow(x, kappa + 1);
  m.converged = x < std::numbers::pi;
  return m;
}

AverageReport average_report(const Schedule& s, const OperatorSum& h,
                             const OperatorSum& target,
                             const QuadratureOptions& options) {
  if (target.n_qubits() != h.n_qubits()) {
    throw DimensionMismatchError("target and Hamiltonian act on different qubit counts");
  }
  AverageReport r{avg_hamiltonian_first(s, h, options),
                  (s.sim_interval / s.cycle_time) * to_dense(target),
                  {},
                  magnus_error_estimate(h, s.cycle_time, 1)};
  if (s.mode != ScheduleMode::bb) {
    r.decoupling_residuals["input"] =
        decoupling_residual(h, s.controls->group, s.controls->pulses, options);
  }
  return r;
}

}  // namespace eulersim
