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

#include "eulersim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "eulersim/errors.hpp"

namespace eulersim {

OpenSystemModel::OpenSystemModel(OperatorSum system_, OperatorSum bath_,
                                 std::vector<std::pair<OperatorSum, OperatorSum>> couplings_,
                                 std::uint64_t seed_)
    : system(std::move(system_)),
      bath(std::move(bath_)),
      couplings(std::move(couplings_)),
      seed(seed_) {
  for (const auto& [s, b] : couplings) {
    if (s.n_qubits() != system.n_qubits() || b.n_qubits() != bath.n_qubits()) {
      throw DimensionMismatchError("coupling operators do not match system/bath sizes");
    }
  }
}

OperatorSum OpenSystemModel::total() const {
  const std::size_t n = total_qubits();
  return system.embedded(n, 0) + bath.embedded(n, system_qubits()) + interaction();
}

OperatorSum OpenSystemModel::interaction() const {
  OperatorSum acc(total_qubits());
  for (const auto& [s, b] : couplings) acc = acc + tensor(s, b);
  return acc;
}

double OpenSystemModel::coupling_norm() const {
  const OperatorSum c = interaction();
  double sum = 0.0;
  for (const auto& t : c.terms()) sum += t.coeff * t.coeff;
  return std::sqrt(std::ldexp(sum, static_cast<int>(total_qubits())));
}

std::vector<OperatorSum> OpenSystemModel::system_errors() const {
  std::vector<OperatorSum> out;
  for (const auto& c : couplings) out.push_back(c.first);
  return out;
}

DenseOperator propagate_cf4(const std::function<DenseOperator(double)>& hamiltonian,
                            double t0, double t1, std::size_t steps) {
  if (steps == 0) throw ConfigError("propagate_cf4 needs at least one step");
  static const double r3 = std::sqrt(3.0);
  const double c1 = 0.5 - r3 / 6.0;
  const double c2 = 0.5 + r3 / 6.0;
  const double a1 = 0.25 - r3 / 6.0;
  const double a2 = 0.25 + r3 / 6.0;
  const double h = (t1 - t0) / static_cast<double>(steps);

  std::optional<DenseOperator> u;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    const DenseOperator h1 = hamiltonian(t + c1 * h);
    const DenseOperator h2 = hamiltonian(t + c2 * h);
    const DenseOperator step = matrix_exp(a1 * h1 + a2 * h2, h) *
                               matrix_exp(a2 * h1 + a1 * h2, h);
    u = u ? step * *u : step;
  }
  return *u;
}

DenseOperator propagate_adaptive(const std::function<DenseOperator(double)>& hamiltonian,
                                 double t0, double t1, const EvolveOptions& options) {
  std::size_t steps = std::max<std::size_t>(1, options.initial_substeps);
  DenseOperator previous = propagate_cf4(hamiltonian, t0, t1, steps);
  for (int d = 0; d < options.max_doublings; ++d) {
    steps *= 2;
    DenseOperator current = propagate_cf4(hamiltonian, t0, t1, steps);
    const double change = (current.matrix() - previous.matrix()).cwiseAbs().maxCoeff();
    if (change < options.substep_tolerance) return current;
    previous = std::move(current);
  }
  throw ConvergenceError("ramp integration did not converge after " +
                         std::to_string(options.max_doublings) + " step doublings");
}

DenseOperator evolve_cycle(const Schedule& s, const OperatorSum& h,
                           const EvolveOptions& options) {
  if (!s.controls) throw ConfigError("schedule has no control system");
  const ControlSystem& cs = *s.controls;
  const std::size_t n = h.n_qubits();
  if (n < cs.group.n_qubits()) {
    throw DimensionMismatchError("Hamiltonian has fewer qubits than the controls act on");
  }
  const DenseOperator hd = to_dense(h);
  const HermitianExponential free(hd);
  DenseOperator u = DenseOperator::identity(n);

  if (s.mode == ScheduleMode::bb) {
    for (const auto& seg : s.segments) {
      if (seg.duration == 0.0) continue;
      const DenseOperator frame = lift(cs.group.element(seg.frame_element), n);
      u = frame.adjoint() * free.at(seg.duration) * frame * u;
    }
    return u;
  }

  std::vector<DenseOperator> axes;
  for (const auto& p : cs.pulses) axes.push_back(to_dense(p.axis().embedded(n, 0)));
  std::map<std::pair<std::size_t, bool>, DenseOperator> ramps;
  auto ramp = [&](std::size_t k, bool reversed) -> const DenseOperator& {
    auto it = ramps.find({k, reversed});
    if (it != ramps.end()) return it->second;
    const PulseShape& shape = cs.pulses[k].shape();
    const double d = shape.duration();
    auto hamiltonian = [&](double t) {
      const double f = reversed ? -shape.value(d - t) : shape.value(t);
      return hd + f * axes[k];
    };
    return ramps.emplace(std::make_pair(k, reversed),
                         propagate_adaptive(hamiltonian, 0.0, d, options))
        .first->second;
  };

  for (const auto& seg : s.segments) {
    if (seg.duration == 0.0) continue;
    if (seg.kind == SegmentKind::coast) {
      u = free.at(seg.duration) * u;
    } else {
      u = ramp(*seg.generator, seg.reversed) * u;
    }
  }
  return u;
}

DenseOperator matrix_power(const DenseOperator& u, int k) {
  if (k < 0) throw ConfigError("negative matrix power");
  DenseOperator result = DenseOperator::identity(u.n_qubits());
  DenseOperator base = u;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

DenseOperator evolve_schedule(const Schedule& s, const OperatorSum& h, int cycles,
                              const EvolveOptions& options) {
  if (cycles < 1) throw ConfigError("number of cycles must be at least 1");
  return matrix_power(evolve_cycle(s, h, options), cycles);
}

double phase_invariant_infidelity(const DenseOperator& u, const DenseOperator& v) {
  if (u.dim() != v.dim()) throw DimensionMismatchError("infidelity of mismatched operators");
  if (!is_unitary(u, 1e-8) || !is_unitary(v, 1e-8)) {
    throw NotUnitaryError("infidelity needs unitary operators");
  }
  const double overlap = std::abs((u.matrix().adjoint() * v.matrix()).trace());
  return std::clamp(1.0 - overlap / static_cast<double>(u.dim()), 0.0, 1.0);
}

double phase_aligned_distance(const DenseOperator& u, const DenseOperator& v) {
  if (u.dim() != v.dim()) throw DimensionMismatchError("distance of mismatched operators");
  // Subtracting the aligned matrices avoids the cancellation in
  // ||u||^2 + ||v||^2 - 2|tr(u^dagger v)| for nearby operators.
  const Complex overlap = (v.matrix().adjoint() * u.matrix()).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (u.matrix() - phase * v.matrix()).norm();
}

namespace {

void check_split(const DenseOperator& a, std::size_t n_s, std::size_t n_b) {
  if (a.n_qubits() != n_s + n_b) {
    throw DimensionMismatchError("operator size does not match n_s + n_b");
  }
}

}  // namespace

DenseOperator partial_trace_bath(const DenseOperator& a, std::size_t n_s, std::size_t n_b) {
  check_split(a, n_s, n_b);
  const Eigen::Index ds = Eigen::Index{1} << n_s;
  const Eigen::Index db = Eigen::Index{1} << n_b;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ds, ds);
  for (Eigen::Index i = 0; i < ds; ++i)
    for (Eigen::Index j = 0; j < ds; ++j)
      for (Eigen::Index b = 0; b < db; ++b) out(i, j) += a.matrix()(i * db + b, j * db + b);
  return DenseOperator(n_s, std::move(out));
}

DenseOperator partial_trace_system(const DenseOperator& a, std::size_t n_s, std::size_t n_b) {
  check_split(a, n_s, n_b);
  const Eigen::Index ds = Eigen::Index{1} << n_s;
  const Eigen::Index db = Eigen::Index{1} << n_b;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(db, db);
  for (Eigen::Index s = 0; s < ds; ++s) out += a.matrix().block(s * db, s * db, db, db);
  return DenseOperator(n_b, std::move(out));
}

ErrorDecomposition effective_error_decomposition(const DenseOperator& h_bar,
                                                 std::size_t n_s, std::size_t n_b) {
  check_split(h_bar, n_s, n_b);
  const double ds = std::ldexp(1.0, static_cast<int>(n_s));
  const double db = std::ldexp(1.0, static_cast<int>(n_b));
  const DenseOperator bath_local = (1.0 / ds) * partial_trace_system(h_bar, n_s, n_b);
  DenseOperator sys_local = (1.0 / db) * partial_trace_bath(h_bar, n_s, n_b);
  sys_local = sys_local - (sys_local.trace() / ds) * DenseOperator::identity(n_s);

  ErrorDecomposition e{kron(sys_local, DenseOperator::identity(n_b)),
                       kron(DenseOperator::identity(n_s), bath_local),
                       DenseOperator::zero(n_s + n_b)};
  e.coupling_part = h_bar - e.system_part - e.bath_part;
  e.system_norm = frobenius_norm(e.system_part);
  e.bath_norm = frobenius_norm(e.bath_part);
  e.coupling_norm = frobenius_norm(e.coupling_part);
  return e;
}

ScalingFit loglog_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw ConfigError("fit needs at least two points");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) throw ConfigError("log-log fit needs positive values");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double vx = sxx - sx * sx / n;
  const double vy = syy - sy * sy / n;
  const double cxy = sxy - sx * sy / n;
  if (vx <= 0.0) throw ConfigError("fit abscissae are all equal");
  ScalingFit fit;
  fit.slope = cxy / vx;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r_squared = vy > 0.0 ? cxy * cxy / (vx * vy) : 1.0;
  return fit;
}

ScalingFit scaling_order_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4) throw ConfigError("scaling fit needs at least four points");
  double lo = points.front().first, hi = lo;
  for (const auto& [x, y] : points) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    if (!(y > 1e-12)) throw ConfigError("scaling fit point at or below the numerical floor");
  }
  if (!(lo > 0.0) || hi / lo < 10.0 * (1.0 - 1e-9)) {
    throw ConfigError("scaling fit points must span at least one decade");
  }
  return loglog_fit(points);
}

double reduced_state_infidelity(const DenseOperator& u, const Eigen::VectorXcd& psi,
                                const Eigen::MatrixXcd& rho_bath, const DenseOperator& v,
                                std::size_t n_s, std::size_t n_b) {
  check_split(u, n_s, n_b);
  const Eigen::MatrixXcd rho0 = kron(DenseOperator(n_s, psi * psi.adjoint()),
                                     DenseOperator(n_b, rho_bath)).matrix();
  const DenseOperator rho(n_s + n_b, u.matrix() * rho0 * u.matrix().adjoint());
  const DenseOperator rho_s = partial_trace_bath(rho, n_s, n_b);
  const Eigen::VectorXcd phi = v.matrix() * psi;
  const double f = (phi.adjoint() * rho_s.matrix() * phi)(0, 0).real();
  return std::clamp(1.0 - f, 0.0, 1.0);
}

SimulationReport simulate(const Schedule& s, const OperatorSum& h,
                          const OperatorSum& target, int cycles,
                          const EvolveOptions& options) {
  if (cycles < 1) throw ConfigError("number of cycles must be at least 1");
  if (target.n_qubits() != h.n_qubits()) {
    throw DimensionMismatchError("target and Hamiltonian act on different qubit counts");
  }
  const DenseOperator cycle = evolve_cycle(s, h, options);
  const DenseOperator target_step = matrix_exp(target, s.sim_interval);
  DenseOperator u = DenseOperator::identity(h.n_qubits());
  DenseOperator v = u;
  std::vector<double> errors;
  for (int m = 0; m < cycles; ++m) {
    u = cycle * u;
    v = target_step * v;
    errors.push_back(phase_aligned_distance(u, v));
  }
  return SimulationReport{u, v, phase_invariant_infidelity(u, v), std::move(errors)};
}

}  // namespace eulersim
