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

#include "holodfs/trotter.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace holodfs {

namespace {

struct ExchangeCoefficients {
  double xx = 0.0, yy = 0.0, xy = 0.0, yx = 0.0;
  double scale() const { return std::abs(xx) + std::abs(yy) + std::abs(xy) + std::abs(yx); }
};

std::string pair_name(int i, int j) { return std::to_string(i) + "-" + std::to_string(j); }

}  // namespace

HamiltonianSpec PairDrive::to_spec(int register_size) const {
  HamiltonianSpec h{register_size, {}};
  const double c = 0.5 * omega * std::cos(phi);
  const double s = 0.5 * omega * std::sin(phi);
  if (c != 0.0) {
    h.terms.push_back({c, {{i, Axis::X}, {j, Axis::X}}});
    h.terms.push_back({c, {{i, Axis::Y}, {j, Axis::Y}}});
  }
  if (s != 0.0) {
    h.terms.push_back({s, {{i, Axis::X}, {j, Axis::Y}}});
    h.terms.push_back({-s, {{i, Axis::Y}, {j, Axis::X}}});
  }
  return h;
}

std::vector<PairDrive> decompose_pair_drives(const HamiltonianSpec& h) {
  h.validate();
  std::map<std::pair<int, int>, ExchangeCoefficients> pairs;
  for (const auto& term : h.terms) {
    if (term.coefficient == 0.0) continue;
    if (term.factors.size() != 2)
      throw std::invalid_argument("term is not two-body: " + format_term(term));
    auto a = term.factors[0];
    auto b = term.factors[1];
    if (a.qubit > b.qubit) std::swap(a, b);
    if (a.axis == Axis::Z || b.axis == Axis::Z)
      throw std::invalid_argument("term is not an exchange drive: " + format_term(term));
    auto& c = pairs[{a.qubit, b.qubit}];
    if (a.axis == Axis::X && b.axis == Axis::X) c.xx += term.coefficient;
    if (a.axis == Axis::Y && b.axis == Axis::Y) c.yy += term.coefficient;
    if (a.axis == Axis::X && b.axis == Axis::Y) c.xy += term.coefficient;
    if (a.axis == Axis::Y && b.axis == Axis::X) c.yx += term.coefficient;
  }
  std::vector<PairDrive> out;
  for (const auto& [pair, c] : pairs) {
    const double eps = 1e-12 * std::max(1.0, c.scale());
    if (std::abs(c.xx - c.yy) > eps || std::abs(c.xy + c.yx) > eps)
      throw std::invalid_argument("pair " + pair_name(pair.first, pair.second) +
                                  " is not of the form a(XX+YY) + b(XY-YX)");
    const double omega = 2.0 * std::hypot(c.xx, c.xy);
    if (omega == 0.0) continue;
    out.push_back({pair.first, pair.second, omega, std::atan2(c.xy, c.xx)});
  }
  return out;
}

TrotterPlan trotterize(const Segment& segment, int repetitions) {
  if (repetitions < 1) throw std::invalid_argument("trotterize: repetitions must be >= 1");
  if (!(segment.duration > 0.0)) throw std::invalid_argument("trotterize: segment duration must be positive");
  const auto drives = decompose_pair_drives(segment.hamiltonian);
  if (drives.empty() || drives.size() > 2)
    throw std::invalid_argument("trotterize: segment must split into one or two exchange drives, found " +
                                std::to_string(drives.size()));
  TrotterPlan plan;
  plan.register_size = segment.hamiltonian.register_size;
  plan.parts[0] = drives[0];
  if (drives.size() == 2) {
    plan.parts[1] = drives[1];
  } else {
    // Absent H2: a zero drive on a neighbouring pair keeps the plan shape.
    plan.parts[1] = PairDrive{drives[0].i, drives[0].j, 0.0, 0.0};
  }
  plan.repetitions = repetitions;
  plan.target = segment;
  const double step = segment.duration / repetitions;
  plan.inner_sequence = {{1, step / 2}, {0, step}, {1, step / 2}};
  return plan;
}

std::vector<TrotterPlan> trotterize(const Schedule& schedule, int repetitions) {
  schedule.validate();
  std::vector<TrotterPlan> plans;
  for (const auto& seg : schedule.segments) plans.push_back(trotterize(seg, repetitions));
  return plans;
}

Operator evaluate(const TrotterPlan& plan) {
  const Eigen::Index dim = Eigen::Index{1} << plan.register_size;
  const std::array<Operator, 2> generators{realize(plan.parts[0].to_spec(plan.register_size)),
                                           realize(plan.parts[1].to_spec(plan.register_size))};
  Operator one = Operator::Identity(dim, dim);
  for (const auto& step : plan.inner_sequence) {
    if (step.part < 0 || step.part > 1) throw std::invalid_argument("Trotter step refers to an unknown part");
    if (step.duration < 0.0) throw std::invalid_argument("Trotter step duration must be nonnegative");
    one = matrix_exp(generators[static_cast<std::size_t>(step.part)], step.duration) * one;
  }
  Operator u = Operator::Identity(dim, dim);
  for (int r = 0; r < plan.repetitions; ++r) u = one * u;
  return u;
}

Operator evaluate(const std::vector<TrotterPlan>& plans) {
  if (plans.empty()) throw std::invalid_argument("evaluate: no plans");
  const Eigen::Index dim = Eigen::Index{1} << plans.front().register_size;
  Operator u = Operator::Identity(dim, dim);
  for (const auto& p : plans) u = evaluate(p) * u;
  return u;
}

double trotter_fidelity(const TrotterPlan& plan) {
  const Operator exact = matrix_exp(realize(plan.target.hamiltonian), plan.target.duration);
  return gate_fidelity(exact, evaluate(plan));
}

}  // namespace holodfs
