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

#include <cmath>
#include <set>
#include <stdexcept>

#include "holodfs/cli.hpp"

namespace holodfs::cli {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string("config: ") + name + " must be finite");
}

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument("config: " + where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
}

template <typename T>
void read(const nlohmann::json& j, const char* key, T& into) {
  if (!j.contains(key)) return;
  try {
    into = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("config: field '") + key + "' has the wrong type");
  }
}

std::pair<int, int> parse_pair(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos || key.size() != 3) throw std::invalid_argument("config: coupling key must look like 1-2");
  const int i = key[0] - '0';
  const int j = key[2] - '0';
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw std::invalid_argument("config: bad coupling pair " + key);
  return {i, j};
}

}  // namespace

std::string to_string(GateKind g) {
  switch (g) {
    case GateKind::Not: return "NOT";
    case GateKind::Hadamard: return "H";
    case GateKind::SingleCustom: return "US";
    case GateKind::Two: return "UT";
    case GateKind::Cz: return "CZ";
  }
  return "?";
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::Exact: return "exact";
    case Backend::Trotter: return "trotter";
    case Backend::NmrCompiled: return "nmr-compiled";
  }
  return "?";
}

GateKind parse_gate(const std::string& s) {
  if (s == "NOT") return GateKind::Not;
  if (s == "H") return GateKind::Hadamard;
  if (s == "US") return GateKind::SingleCustom;
  if (s == "UT") return GateKind::Two;
  if (s == "CZ") return GateKind::Cz;
  throw std::invalid_argument("config: unknown gate '" + s + "' (NOT, H, US, UT, CZ)");
}

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::Exact;
  if (s == "trotter") return Backend::Trotter;
  if (s == "nmr-compiled") return Backend::NmrCompiled;
  throw std::invalid_argument("config: unknown backend '" + s + "' (exact, trotter, nmr-compiled)");
}

void ExperimentConfig::validate() const {
  for (auto [v, name] : {std::pair{gamma, "gamma"}, {theta, "theta"}, {phi, "phi"}, {vartheta, "vartheta"},
                         {varphi, "varphi"}, {omega, "omega"}, {epsilon, "epsilon"}, {sigma, "sigma"}})
    require_finite(v, name);
  if (!(omega > 0.0)) throw std::invalid_argument("config: omega must be positive");
  if (repetitions < 1) throw std::invalid_argument("config: N must be >= 1");
  if (trotter_repetitions < 1) throw std::invalid_argument("config: trotter_repetitions must be >= 1");
  if (std::abs(epsilon) >= 1.0) throw std::invalid_argument("config: epsilon must satisfy |epsilon| < 1");
  if (sigma < 0.0) throw std::invalid_argument("config: sigma must be >= 0");
  if (gate == GateKind::Cz && backend != Backend::Exact)
    throw std::invalid_argument("config: CZ is only available with the exact backend");
  if (gate == GateKind::Cz || gate == GateKind::Two) {
    if (repetitions != 1) throw std::invalid_argument("config: composite scheme applies to single-qubit gates only");
  }
  for (const auto& [key, hz] : couplings) {
    parse_pair(key);
    require_finite(hz, "coupling");
  }
  if (sweep_gates.empty()) throw std::invalid_argument("config: sweep.gates is empty");
  for (const auto& g : sweep_gates)
    if (g != "NOT" && g != "H") throw std::invalid_argument("config: sweep gates must be NOT or H, got " + g);
  for (double e : sweep_grid) {
    require_finite(e, "sweep grid value");
    if (std::abs(e) >= 1.0) throw std::invalid_argument("config: sweep grid values must satisfy |epsilon| < 1");
  }
  if (sweep_composite < 2) throw std::invalid_argument("config: sweep.composite_N must be >= 2");
  if (noise_trials < 1) throw std::invalid_argument("config: noise.trials must be >= 1");
}

SingleGateSpec ExperimentConfig::single_spec() const {
  switch (gate) {
    case GateKind::Not: return SingleGateSpec::make(kPi, kPi / 2, 0.0, omega);
    case GateKind::Hadamard: return SingleGateSpec::make(kPi, kPi / 4, 0.0, omega);
    case GateKind::SingleCustom: return SingleGateSpec::make(gamma, theta, phi, omega);
    default: throw std::invalid_argument("config: gate " + to_string(gate) + " is not a single-qubit gate");
  }
}

TwoGateSpec ExperimentConfig::two_spec() const { return TwoGateSpec::make(vartheta, varphi, omega); }

NmrSystem ExperimentConfig::nmr_system() const {
  NmrSystem sys = NmrSystem::diethyl_fluoromalonate();
  for (const auto& [key, hz] : couplings) {
    const auto [i, j] = parse_pair(key);
    sys.set_coupling(i, j, hz);
  }
  return sys;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig c) {
  reject_unknown(j,
                 {"gate", "gamma", "theta", "phi", "vartheta", "varphi", "omega", "scheme", "N", "backend",
                  "trotter_repetitions", "cz_variant", "noise", "nmr", "sweep", "output"},
                 "config");
  if (j.contains("gate")) c.gate = parse_gate(j.at("gate").get<std::string>());
  read(j, "gamma", c.gamma);
  read(j, "theta", c.theta);
  read(j, "phi", c.phi);
  read(j, "vartheta", c.vartheta);
  read(j, "varphi", c.varphi);
  read(j, "omega", c.omega);
  read(j, "N", c.repetitions);
  if (j.contains("scheme")) {
    const auto s = j.at("scheme").get<std::string>();
    if (s == "single-loop") {
      if (j.contains("N") && c.repetitions != 1) throw std::invalid_argument("config: single-loop scheme needs N = 1");
      c.repetitions = 1;
    } else if (s == "composite") {
      if (!j.contains("N")) c.repetitions = 2;
    } else {
      throw std::invalid_argument("config: unknown scheme '" + s + "' (single-loop, composite)");
    }
  }
  if (j.contains("backend")) c.backend = parse_backend(j.at("backend").get<std::string>());
  read(j, "trotter_repetitions", c.trotter_repetitions);
  if (j.contains("cz_variant")) c.cz_variant = parse_cz_variant(j.at("cz_variant").get<std::string>());
  if (j.contains("noise")) {
    const auto& n = j.at("noise");
    reject_unknown(n, {"epsilon", "sigma", "seed", "spam", "trials"}, "noise");
    read(n, "epsilon", c.epsilon);
    read(n, "sigma", c.sigma);
    read(n, "seed", c.seed);
    read(n, "trials", c.noise_trials);
    if (n.contains("spam")) {
      const auto s = n.at("spam").get<std::string>();
      if (s != "ideal" && s != "reference") throw std::invalid_argument("config: noise.spam must be ideal or reference");
      c.reference_spam = s == "reference";
    }
  }
  if (j.contains("nmr")) {
    const auto& n = j.at("nmr");
    reject_unknown(n, {"couplings"}, "nmr");
    read(n, "couplings", c.couplings);
  }
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    reject_unknown(s, {"gates", "grid", "composite_N"}, "sweep");
    read(s, "gates", c.sweep_gates);
    read(s, "grid", c.sweep_grid);
    read(s, "composite_N", c.sweep_composite);
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    reject_unknown(o, {"dir"}, "output");
    std::string dir = c.out_dir.string();
    read(o, "dir", dir);
    c.out_dir = dir;
  }
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["gate"] = to_string(c.gate);
  j["gamma"] = c.gamma;
  j["theta"] = c.theta;
  j["phi"] = c.phi;
  j["vartheta"] = c.vartheta;
  j["varphi"] = c.varphi;
  j["omega"] = c.omega;
  j["scheme"] = c.repetitions == 1 ? "single-loop" : "composite";
  j["N"] = c.repetitions;
  j["backend"] = to_string(c.backend);
  j["trotter_repetitions"] = c.trotter_repetitions;
  j["cz_variant"] = to_string(c.cz_variant);
  j["noise"] = {{"epsilon", c.epsilon},
                {"sigma", c.sigma},
                {"seed", c.seed},
                {"spam", c.reference_spam ? "reference" : "ideal"},
                {"trials", c.noise_trials}};
  j["nmr"] = {{"couplings", c.couplings}};
  j["sweep"] = {{"gates", c.sweep_gates}, {"grid", c.sweep_grid}, {"composite_N", c.sweep_composite}};
  j["output"] = {{"dir", c.out_dir.string()}};
  return j;
}

}  // namespace holodfs::cli
