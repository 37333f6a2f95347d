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

#include "eulersim/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "eulersim/averaging.hpp"
#include "eulersim/dynamics.hpp"
#include "eulersim/errors.hpp"
#include "eulersim/serialization.hpp"

namespace eulersim {

namespace {

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.rfind(prefix, 0) == 0;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << std::scientific << v;
  return s.str();
}

}  // namespace

OperatorSum resolve_operator(const std::string& name) {
  if (starts_with(name, "heisenberg")) {
    const std::string rest = name.substr(10);
    const std::size_t n = rest.empty() ? 2 : static_cast<std::size_t>(parse_number(rest));
    return heisenberg_chain(n, 1.0);
  }
  if (name == "dipolar") return dipolar_target(1.0);
  if (name == "xx") return xyz_target(1.0, 1.0, 0.0);
  if (starts_with(name, "xyz:")) {
    std::vector<double> j;
    std::istringstream in(name.substr(4));
    std::string item;
    while (std::getline(in, item, ',')) j.push_back(parse_number(item));
    if (j.size() != 3) throw ConfigError("xyz target needs three couplings: xyz:jx,jy,jz");
    return xyz_target(j[0], j[1], j[2]);
  }
  if (name == "honeycomb") return honeycomb_hamiltonians(HoneycombLattice::plaquette(), 1.0).first;
  if (name == "kitaev") return honeycomb_hamiltonians(HoneycombLattice::plaquette(), 1.0).second;
  if (std::filesystem::exists(name)) return operator_from_json(read_json_file(name));
  throw ConfigError("unknown operator preset or file '" + name + "'");
}

Problem resolve_problem(const RunConfig& cfg) {
  if (starts_with(cfg.model, "open_chain")) {
    std::string axes = cfg.model.size() > 10 ? cfg.model.substr(10) : "xyz";
    if (!axes.empty() && axes[0] == '_') axes.erase(0, 1);
    const OpenSystemModel m = open_chain_model(2, axes, cfg.seed);
    OperatorSum target = cfg.target == "same" ? m.system : resolve_operator(cfg.target);
    if (target.n_qubits() != m.system_qubits()) {
      throw ConfigError("target acts on a different number of qubits than the system");
    }
    return Problem{m.total(), m.system, std::move(target), m.bath, m.system_errors()};
  }
  OperatorSum h = resolve_operator(cfg.model);
  OperatorSum target = cfg.target == "same" ? h : resolve_operator(cfg.target);
  if (target.n_qubits() != h.n_qubits()) {
    throw ConfigError("target acts on a different number of qubits than the model");
  }
  return Problem{h, h, std::move(target), std::nullopt, {}};
}

std::shared_ptr<const ControlSystem> resolve_controls(const RunConfig& cfg,
                                                      std::size_t n_system, double delta) {
  const auto gens = group_generators(cfg.group, n_system);
  PulseShape shape = PulseShape::sine_squared(1.0, 1.0);
  if (cfg.shape.find('.') != std::string::npos || std::filesystem::exists(cfg.shape)) {
    shape = PulseShape::from_csv(cfg.shape).with_duration(delta);
  } else {
    shape = PulseShape::named(cfg.shape, delta, 1.0);
  }
  return ControlSystem::build(cfg.group, gens, shape);
}

WeightAssignment synthesize_weights(const Problem& p, const ControlSystem& cs) {
  WeightAssignment w = p.errors.empty()
                           ? solve_weights(p.system, p.target, cs.group)
                           : solve_weights_open(p.system, p.errors, p.target, cs.group);
  w.group_name = cs.name;
  return w;
}

OperatorSum ideal_target(const Problem& p, const Schedule& s) {
  const std::size_t n = p.hamiltonian.n_qubits();
  OperatorSum t = p.target.embedded(n, 0);
  if (p.bath) t = t + (s.cycle_time / s.sim_interval) * p.bath->embedded(n, p.system_qubits());
  return t;
}

namespace {

struct Output {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;

  // JSON goes to --out when given (summary to stdout), else to stdout
  // (summary to stderr).
  void emit(const json& j, const std::string& summary) const {
    if (!cfg.out.empty()) {
      write_json_file(cfg.out, j);
      out << summary;
    } else {
      out << j.dump(2) << '\n';
      err << summary;
    }
  }
  void emit_text(const std::string& text, const std::string& summary) const {
    if (!cfg.out.empty()) {
      std::ofstream f(cfg.out);
      if (!f) throw ConfigError("cannot write " + cfg.out);
      f << text;
      out << summary;
    } else {
      out << text;
      err << summary;
    }
  }
};

double delta_of(const RunConfig& cfg) {
  const double delta = cfg.delta.value_or(cfg.tsim / 10.0);
  if (!(cfg.tsim > 0.0)) throw ConfigError("--tsim must be positive");
  if (!(delta > 0.0)) throw ConfigError("--delta must be positive");
  return delta;
}

json tolerances_json(double tol) {
  return {{"report_tolerance", tol},
          {"lp_feasibility", SolveOptions{}.feasibility_tol},
          {"lp_residual", SolveOptions{}.residual_tol},
          {"quadrature", QuadratureOptions{}.tolerance},
          {"substep", EvolveOptions{}.substep_tolerance}};
}

struct Built {
  Problem problem;
  Schedule schedule;
};

Built build_from_presets(const RunConfig& cfg, double tsim, double delta) {
  Problem p = resolve_problem(cfg);
  auto controls = resolve_controls(cfg, p.system_qubits(), delta);
  const WeightAssignment w = synthesize_weights(p, *controls);
  Schedule s = build_schedule(mode_from_name(cfg.mode), controls, w, tsim);
  return Built{std::move(p), std::move(s)};
}

int cmd_synth(const RunConfig& cfg, const Output& io) {
  const Built b = build_from_presets(cfg, cfg.tsim, delta_of(cfg));
  const Schedule& s = b.schedule;
  const ControlSystem& cs = *s.controls;
  const ScheduleDocument doc{s, b.problem.hamiltonian, ideal_target(b.problem, s)};
  json j = schedule_to_json(doc);
  j["closure"] = closure_to_json(cs);
  j["residual"] = reachability_residual(b.problem.system, b.problem.target, s.weights, cs.group);
  j["tolerances"] = tolerances_json(SolveOptions{}.residual_tol);
  std::ostringstream sum;
  sum << "group " << cs.name << ": |G| = " << cs.group.order()
      << ", |Gamma| = " << cs.group.generator_count() << ", N = " << cs.segment_count() << '\n'
      << "W = " << s.weights.total << " (" << s.weights.nonzero_count()
      << " nonzero weights), T_c = " << s.cycle_time << ", mode " << mode_name(s.mode) << '\n';
  io.emit(j, sum.str());
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, const Output& io) {
  if (cfg.schedule_path.empty()) throw ConfigError("verify needs a schedule file");
  const ScheduleDocument doc = schedule_from_json(read_json_file(cfg.schedule_path));
  const double tol = cfg.tol.value_or(1e-8);
  const AverageReport r = average_report(doc.schedule, doc.hamiltonian, doc.target);
  const std::string structure = schedule_violation(doc.schedule);
  const bool pass = r.residual_norm() <= tol && structure.empty();
  json j = average_report_to_json(r);
  j["structure"] = structure.empty() ? "ok" : structure;
  j["pass"] = pass;
  j["tolerances"] = tolerances_json(tol);
  std::ostringstream sum;
  sum << "residual ||H0 - (T_sim/T_c) target||_F = " << fmt(r.residual_norm())
      << " (tolerance " << fmt(tol) << ")\n";
  for (const auto& [k, v] : r.decoupling_residuals) {
    sum << "decoupling residual [" << k << "] = " << fmt(v) << '\n';
  }
  if (!structure.empty()) sum << "schedule problem: " << structure << '\n';
  sum << (pass ? "PASS" : "FAIL") << '\n';
  io.emit(j, sum.str());
  return pass ? kExitPass : kExitVerificationFailure;
}

int cmd_simulate(const RunConfig& cfg, const Output& io) {
  if (cfg.cycles < 1) throw ConfigError("--cycles must be at least 1");
  if (cfg.metric != "distance" && cfg.metric != "infidelity") {
    throw ConfigError("--metric must be 'distance' or 'infidelity'");
  }
  std::optional<Built> built;
  std::optional<ScheduleDocument> doc;
  if (!cfg.schedule_path.empty()) {
    doc = schedule_from_json(read_json_file(cfg.schedule_path));
  } else {
    built.emplace(build_from_presets(cfg, cfg.tsim, delta_of(cfg)));
    doc = ScheduleDocument{built->schedule, built->problem.hamiltonian,
                           ideal_target(built->problem, built->schedule)};
  }
  const SimulationReport r = simulate(doc->schedule, doc->hamiltonian, doc->target, cfg.cycles);
  std::vector<double> metric = r.per_cycle_error;
  if (cfg.metric == "infidelity") {
    const DenseOperator cycle = evolve_cycle(doc->schedule, doc->hamiltonian);
    const DenseOperator step = matrix_exp(doc->target, doc->schedule.sim_interval);
    DenseOperator u = DenseOperator::identity(doc->hamiltonian.n_qubits()), v = u;
    for (double& m : metric) {
      u = cycle * u;
      v = step * v;
      m = phase_invariant_infidelity(u, v);
    }
  }
  const bool pass = !cfg.tol || metric.back() <= *cfg.tol;
  json j = {{"metric", cfg.metric},
            {"cycles", cfg.cycles},
            {"cycle_time", doc->schedule.cycle_time},
            {"per_cycle", metric},
            {"final_infidelity", r.infidelity},
            {"magnus_estimate",
             magnus_error_estimate(doc->hamiltonian, doc->schedule.cycle_time, 1).estimate},
            {"pass", pass}};
  if (cfg.tol) j["tolerances"] = tolerances_json(*cfg.tol);
  std::ostringstream sum;
  sum << cfg.metric << " after " << cfg.cycles << " cycle(s) = " << fmt(metric.back())
      << " (T_c = " << doc->schedule.cycle_time << ")\n";
  io.emit(j, sum.str());
  return pass ? kExitPass : kExitVerificationFailure;
}

int cmd_sweep(const RunConfig& cfg, const Output& io) {
  if (cfg.points < 4) throw ConfigError("sweep needs at least 4 points");
  if (!(cfg.min > 0.0) || !(cfg.max >= 10.0 * cfg.min * (1.0 - 1e-9))) {
    throw ConfigError("sweep range must be positive and span at least one decade");
  }
  if (cfg.param != "cycle" && cfg.param != "delta" && cfg.param != "tsim") {
    throw ConfigError("--param must be one of cycle, delta, tsim");
  }
  const ScheduleMode mode = mode_from_name(cfg.mode);
  const double ratio = cfg.delta ? *cfg.delta / cfg.tsim : 0.1;

  // Group size and W do not depend on the time scales; resolve them once.
  const Built probe = build_from_presets(cfg, cfg.tsim, delta_of(cfg));
  const double n_edges = static_cast<double>(probe.schedule.controls->segment_count());
  const double w_total = probe.schedule.weights.total;

  std::vector<double> values(static_cast<std::size_t>(cfg.points));
  for (int i = 0; i < cfg.points; ++i) {
    const double f = static_cast<double>(i) / (cfg.points - 1);
    values[static_cast<std::size_t>(i)] = cfg.min * std::pow(cfg.max / cfg.min, f);
  }

  auto job = [&](double v) {
    double tsim = cfg.tsim, delta = cfg.tsim * ratio;
    if (cfg.param == "cycle") {
      const double ramps = mode == ScheduleMode::bb ? 0.0
                           : mode == ScheduleMode::symmetric ? 2.0 * n_edges
                                                              : n_edges;
      tsim = v / (ramps * ratio + w_total);
      delta = ratio * tsim;
    } else if (cfg.param == "tsim") {
      tsim = v;
      delta = cfg.delta ? *cfg.delta : ratio * v;
    } else {
      delta = v;
    }
    const Built b = build_from_presets(cfg, tsim, delta);
    const DenseOperator u = evolve_cycle(b.schedule, b.problem.hamiltonian);
    const DenseOperator ideal = matrix_exp(ideal_target(b.problem, b.schedule), tsim);
    return std::make_pair(b.schedule.cycle_time, phase_aligned_distance(u, ideal));
  };
  std::vector<std::future<std::pair<double, double>>> futures;
  for (double v : values) futures.push_back(std::async(std::launch::async, job, v));

  std::ostringstream csv;
  csv << "param,value,cycle_time,error,slope_so_far\n";
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto [tc, error] = futures[i].get();
    points.emplace_back(values[i], error);
    std::string slope = "nan";
    if (points.size() >= 2) slope = fmt(loglog_fit(points).slope);
    csv << cfg.param << ',' << fmt(values[i]) << ',' << fmt(tc) << ',' << fmt(error) << ','
        << slope << '\n';
  }
  const ScalingFit fit = scaling_order_fit(points);
  csv << "# fit slope=" << fmt(fit.slope) << " intercept=" << fmt(fit.intercept)
      << " r2=" << fmt(fit.r_squared) << '\n';
  std::ostringstream sum;
  sum << "fitted slope " << std::setprecision(4) << fit.slope << " over " << cfg.points
      << " points (" << cfg.mode << ", param " << cfg.param << ")\n";
  io.emit_text(csv.str(), sum.str());
  return kExitPass;
}

int cmd_models(const RunConfig& cfg, const Output& io) {
  if (cfg.lattice) {
    io.emit(lattice_to_json(HoneycombLattice::plaquette()), "honeycomb plaquette lattice\n");
    return kExitPass;
  }
  if (!cfg.group.empty() && cfg.group != "all") {
    const std::size_t n = cfg.group == "honeycomb" ? 6 : cfg.qubits;
    const auto cs = ControlSystem::build(cfg.group, group_generators(cfg.group, n),
                                         PulseShape::sine_squared(1.0, 1.0));
    std::ostringstream sum;
    sum << cfg.group << ": |G| = " << cs->group.order() << ", N = " << cs->segment_count() << '\n';
    io.emit(closure_to_json(*cs), sum.str());
    return kExitPass;
  }
  json groups = json::array();
  for (const auto& name : group_preset_names()) {
    const std::size_t n = name == "honeycomb" ? 6 : 2;
    const auto g = group_preset(name, n);
    groups.push_back({{"name", name},
                      {"n_qubits", n},
                      {"order", g.group.order()},
                      {"generators", g.group.generator_labels()},
                      {"segments", g.group.order() * g.group.generator_count()}});
  }
  json j = {{"models", {"heisenberg<n>", "dipolar", "xx", "xyz:jx,jy,jz", "honeycomb",
                        "kitaev", "open_chain[_axes]"}},
            {"targets", {"dipolar", "xx", "xyz:jx,jy,jz", "kitaev", "same"}},
            {"groups", groups},
            {"shapes", {"sine2", "triangle", "constant", "<file.csv>"}}};
  io.emit(j, "presets listed\n");
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Eulerian control synthesis for Hamiltonian simulation"};
  app.require_subcommand(1);

  auto problem_flags = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "model preset or operator JSON file");
    sub->add_option("--target", cfg.target, "target preset or operator JSON file");
    sub->add_option("--group", cfg.group, "group preset");
    sub->add_option("--mode", cfg.mode, "bb, eulerian or symmetric");
    sub->add_option("--shape", cfg.shape, "sine2, triangle, constant or a (t,f) CSV file");
    sub->add_option("--delta", cfg.delta, "ramp duration (default tsim/10)");
    sub->add_option("--tsim", cfg.tsim, "simulated time per cycle");
    sub->add_option("--seed", cfg.seed, "seed for random bath operators");
    sub->add_option("--out", cfg.out, "output file");
  };
  auto* synth = app.add_subcommand("synth", "solve weights and build a schedule");
  problem_flags(synth);
  auto* verify = app.add_subcommand("verify", "check a schedule's average Hamiltonian");
  verify->add_option("schedule", cfg.schedule_path, "schedule JSON")->required();
  verify->add_option("--tol", cfg.tol, "residual tolerance (default 1e-8)");
  verify->add_option("--out", cfg.out, "output file");
  auto* sim = app.add_subcommand("simulate", "integrate the propagator over control cycles");
  problem_flags(sim);
  sim->add_option("--schedule", cfg.schedule_path, "schedule JSON instead of presets");
  sim->add_option("--cycles", cfg.cycles, "number of cycles");
  sim->add_option("--metric", cfg.metric, "distance or infidelity");
  sim->add_option("--tol", cfg.tol, "fail above this error");
  auto* sweep = app.add_subcommand("sweep", "error scaling over a parameter range");
  problem_flags(sweep);
  sweep->add_option("--param", cfg.param, "cycle, delta or tsim");
  sweep->add_option("--min", cfg.min, "smallest value")->required();
  sweep->add_option("--max", cfg.max, "largest value")->required();
  sweep->add_option("--points", cfg.points, "number of points (>= 4)");
  auto* models = app.add_subcommand("models", "list presets or export a closure/lattice");
  models->add_option("--group", cfg.group, "export this group's closure");
  models->add_option("--qubits", cfg.qubits, "qubit count for the group");
  models->add_flag("--lattice", cfg.lattice, "export the honeycomb plaquette");
  models->add_option("--out", cfg.out, "output file");

  std::vector<std::string> argv_store{"eulersim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfigError;
  }
  if (models->parsed() && models->count("--group") == 0) cfg.group = "all";

  const Output io{cfg, out, err};
  try {
    if (synth->parsed()) return cmd_synth(cfg, io);
    if (verify->parsed()) return cmd_verify(cfg, io);
    if (sim->parsed()) return cmd_simulate(cfg, io);
    if (sweep->parsed()) return cmd_sweep(cfg, io);
    if (models->parsed()) return cmd_models(cfg, io);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace eulersim
