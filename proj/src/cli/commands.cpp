// Copyright 2026 The holodfs Authors
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

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "holodfs/cli.hpp"
#include "holodfs/format.hpp"
#include "holodfs/nmr_compiler.hpp"
#include "holodfs/noise.hpp"
#include "holodfs/qpt.hpp"
#include "holodfs/trotter.hpp"

namespace holodfs::cli {

namespace {

using Clock = std::chrono::steady_clock;

class Report {
 public:
  Report(std::string command, const ExperimentConfig& cfg, std::ostream& out) : out_(out), start_(Clock::now()) {
    json_["command"] = std::move(command);
    json_["config"] = config_to_json(cfg);
  }

  void value(const std::string& key, double v) {
    out_ << key << ' ' << format_real(v) << '\n';
    json_["results"][key] = v;
  }
  void text(const std::string& key, const std::string& v) {
    out_ << key << ' ' << v << '\n';
    json_["results"][key] = v;
  }
  void finish(const std::filesystem::path& dir) {
    json_["timing_s"] = std::chrono::duration<double>(Clock::now() - start_).count();
    write_file_atomic(dir / "report.json", json_.dump(2) + "\n");
  }

 private:
  std::ostream& out_;
  Clock::time_point start_;
  nlohmann::json json_;
};

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::invalid_argument("cannot create output directory " + dir.string() + ": " + ec.message());
}

CzConstruction checked_cz(const ExperimentConfig& cfg) {
  CzConstruction cz = build_cz(cfg.cz_variant);
  if (!cz.is_cz) throw InvariantError(cz.diagnostic + " (use --cz-variant phase-corrected)");
  return cz;
}

Schedule ideal_schedule(const ExperimentConfig& cfg) {
  if (cfg.is_single()) return synthesize_composite({cfg.single_spec(), cfg.repetitions});
  if (cfg.gate == GateKind::Two) return synthesize_two(cfg.two_spec(), TwoQubitRegister::Reduced);
  return cz_schedule(checked_cz(cfg));
}

// Logical encoding matching the register of ideal_schedule().
DfsEncoding logical_encoding(const ExperimentConfig& cfg) {
  if (cfg.is_single()) return DfsEncoding::single();
  if (cfg.gate == GateKind::Two) return reduce_two_logical(DfsEncoding::two());
  return DfsEncoding::two();
}

Operator ideal_logical(const ExperimentConfig& cfg) {
  if (cfg.is_single()) return closed_form_single(cfg.single_spec());
  if (cfg.gate == GateKind::Two) return closed_form_two(cfg.two_spec());
  return cz_matrix();
}

NmrSystem compiler_system(const ExperimentConfig& cfg) {
  const NmrSystem sys = cfg.nmr_system();
  // The reduced two-qubit register orders its spins (C, H, F).
  return cfg.gate == GateKind::Two ? sys.permuted({2, 1, 3}) : sys;
}

struct Realization {
  Operator unitary;
  std::vector<TrotterPlan> plans;
  std::optional<CompiledProgram> program;
};

Realization realize_backend(const ExperimentConfig& cfg, const Schedule& schedule) {
  Realization r;
  if (cfg.backend == Backend::Exact) {
    r.unitary = simulate(schedule);
    return r;
  }
  r.plans = trotterize(schedule, cfg.trotter_repetitions);
  if (cfg.backend == Backend::Trotter) {
    r.unitary = evaluate(r.plans);
    return r;
  }
  r.program = lower_to_nmr(r.plans, compiler_system(cfg));
  r.unitary = program_unitary(r.program->instructions, compiler_system(cfg));
  return r;
}

std::string program_text(const ExperimentConfig& cfg, const CompiledProgram& prog) {
  std::ostringstream os;
  os << "# gate " << to_string(cfg.gate) << " N " << cfg.repetitions << " trotter_repetitions "
     << cfg.trotter_repetitions << '\n';
  write_program(os, prog.instructions);
  return os.str();
}

std::string schedule_text(const Schedule& s) {
  std::ostringstream os;
  write_schedule(os, s);
  return os.str();
}

}  // namespace

int cmd_synthesize(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  ensure_dir(cfg.out_dir);
  Report rep("synthesize", cfg, out);
  const Schedule schedule = apply_systematic(ideal_schedule(cfg), cfg.epsilon);
  write_file_atomic(cfg.out_dir / "schedule.txt", schedule_text(schedule));
  rep.text("gate", to_string(cfg.gate));
  rep.text("backend", to_string(cfg.backend));
  rep.value("segments", static_cast<double>(schedule.segments.size()));
  rep.text("schedule", (cfg.out_dir / "schedule.txt").string());

  const Operator exact = simulate(schedule);
  const DfsEncoding enc = logical_encoding(cfg);
  const Operator logical = project(exact, enc.leading(ideal_logical(cfg).rows()));
  rep.value("closed_form_distance", phase_aligned_distance(logical, ideal_logical(cfg)));

  if (cfg.backend != Backend::Exact) {
    const Realization r = realize_backend(cfg, schedule);
    rep.value("trotter_fidelity", gate_fidelity(exact, evaluate(r.plans)));
    if (r.program) {
      write_file_atomic(cfg.out_dir / "program.txt", program_text(cfg, *r.program));
      rep.text("program", (cfg.out_dir / "program.txt").string());
      rep.value("instructions", static_cast<double>(r.program->instructions.size()));
      rep.value("compile_fidelity", r.program->achieved_fidelity);
      rep.value("fidelity_vs_exact", gate_fidelity(exact, r.unitary));
    }
  }
  rep.finish(cfg.out_dir);
  return 0;
}

int cmd_qpt(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  ensure_dir(cfg.out_dir);
  Report rep("qpt", cfg, out);
  const std::uint64_t stream = stream_seed(cfg.seed, 0);
  ChiMatrix chi;
  if (cfg.reference_spam && !cfg.is_single())
    throw std::invalid_argument("config: reference SPAM inputs exist for single-qubit gates only");

  if (cfg.is_single() && cfg.backend == Backend::Exact) {
    NoiseConfig noise;
    noise.epsilon = cfg.epsilon;
    noise.measurement_noise_sigma = cfg.sigma;
    noise.rng_seed = cfg.seed;
    if (cfg.reference_spam) noise.spam_records = depolarized_inputs(reference_input_distances());
    chi = perturbed_gate_chi({to_string(cfg.gate), cfg.single_spec()}, cfg.repetitions, cfg.epsilon, noise, stream, true);
  } else {
    const Schedule schedule = apply_systematic(ideal_schedule(cfg), cfg.epsilon);
    const Realization r = realize_backend(cfg, schedule);
    QptOptions opts;
    opts.tomography = gaussian_tomography(cfg.sigma, stream);
    if (cfg.reference_spam) opts.prepared_inputs = depolarized_inputs(reference_input_distances());
    const DfsEncoding enc = logical_encoding(cfg);
    chi = cfg.is_single() ? run_qpt_single(unitary_channel(r.unitary), enc, opts)
                          : run_qpt_two(unitary_channel(r.unitary), enc, opts);
  }
  const double d = gate_distance(chi, chi_of_unitary(ideal_logical(cfg)));
  nlohmann::json doc = to_json(chi, true);
  doc["chi_distance"] = d;
  write_file_atomic(cfg.out_dir / "chi.json", doc.dump(2) + "\n");
  rep.text("gate", to_string(cfg.gate));
  rep.text("backend", to_string(cfg.backend));
  rep.value("chi_distance", d);
  rep.text("flags", chi.flags.describe());
  rep.text("chi", (cfg.out_dir / "chi.json").string());
  rep.finish(cfg.out_dir);
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  ensure_dir(cfg.out_dir);
  Report rep("sweep", cfg, out);
  NoiseConfig noise;
  noise.measurement_noise_sigma = cfg.sigma;
  noise.rng_seed = cfg.seed;
  if (cfg.reference_spam) noise.spam_records = depolarized_inputs(reference_input_distances());
  std::vector<SweepGate> gates;
  for (const auto& g : cfg.sweep_gates)
    gates.push_back({g, g == "NOT" ? SingleGateSpec::not_gate() : SingleGateSpec::hadamard()});
  const auto grid = cfg.sweep_grid.empty() ? default_epsilon_grid() : cfg.sweep_grid;
  const SweepResult res = run_sweep(gates, {1, cfg.sweep_composite}, grid, noise);
  write_file_atomic(cfg.out_dir / "sweep.csv", res.to_csv());
  write_file_atomic(cfg.out_dir / "sweep.json", res.to_json().dump(2) + "\n");
  rep.value("rows", static_cast<double>(res.rows.size()));
  rep.text("csv", (cfg.out_dir / "sweep.csv").string());
  rep.text("json", (cfg.out_dir / "sweep.json").string());
  rep.finish(cfg.out_dir);
  return 0;
}

int cmd_compile_check(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.gate == GateKind::Cz) throw std::invalid_argument("config: compile-check supports NOT, H, US and UT");
  ensure_dir(cfg.out_dir);
  Report rep("compile-check", cfg, out);
  const NmrSystem sys = compiler_system(cfg);
  const Schedule schedule = ideal_schedule(cfg);
  const auto plans = trotterize(schedule, cfg.trotter_repetitions);
  const CompiledProgram compiled = lower_to_nmr(plans, sys);

  std::vector<NmrInstruction> program;
  if (cfg.program_in) {
    std::ifstream in(*cfg.program_in);
    if (!in) throw std::invalid_argument("cannot read program file " + cfg.program_in->string());
    program = read_program(in);
  } else {
    const std::string text = program_text(cfg, compiled);
    write_file_atomic(cfg.out_dir / "program.txt", text);
    std::istringstream in(text);
    program = read_program(in);
    rep.text("program", (cfg.out_dir / "program.txt").string());
  }

  const Operator u = program_unitary(program, sys);
  const double distance = phase_aligned_distance(u, compiled.declared_target);
  const double refocus = spectator_refocus_defect(program, sys);
  rep.value("instructions", static_cast<double>(program.size()));
  rep.value("compile_fidelity", gate_fidelity(compiled.declared_target, u));
  rep.value("target_distance", distance);
  rep.value("refocus_defect", refocus);
  rep.value("free_time", total_free_time(program));
  rep.value("fidelity_vs_exact", gate_fidelity(simulate(schedule), u));

  bool windows_ok = true;
  std::map<std::string, double> windows;
  for (const auto& ins : program)
    if (ins.kind == NmrInstruction::Kind::Free) windows[std::to_string(ins.i) + "-" + std::to_string(ins.j)] = ins.duration;
  for (const auto& [pair, t] : windows) rep.value("window_" + pair, t);
  if (cfg.is_single()) {
    // Window lengths follow from a = Omega_k (tau/2) / (2 r) with Omega tau = pi.
    const auto spec = cfg.single_spec();
    const double r = cfg.trotter_repetitions;
    const double t12 = std::abs(std::cos(spec.theta / 2)) / (4 * r * std::abs(sys.coupling(1, 2)));
    const double t23 = std::abs(std::sin(spec.theta / 2)) / (8 * r * std::abs(sys.coupling(2, 3)));
    rep.value("expected_window_1-2", t12);
    rep.value("expected_window_2-3", t23);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(b), 1e-300); };
    if (windows.count("1-2") && !close(windows["1-2"], t12)) windows_ok = false;
    if (windows.count("2-3") && !close(windows["2-3"], t23)) windows_ok = false;
  }
  const bool ok = distance <= 1e-8 && refocus <= 1e-10 && windows_ok;
  rep.text("status", ok ? "ok" : "mismatch");
  rep.finish(cfg.out_dir);
  return ok ? 0 : 2;
}

}  // namespace holodfs::cli
