// Copyright 2026 The tsregret Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsr/core/regret.hpp"

#include <optional>
#include <vector>

namespace tsr {

Scenario scenario_from_v(const Instance& inst, const BinaryVector& v) {
  inst.check_length(v, "v");
  Scenario c;
  c.costs.resize(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    c.costs[i] = v[i] ? inst.lower()[i] : inst.upper()[i];
  }
  return c;
}

Cost incremental_cost(const StructureOracle& oracle, const BinaryVector& x, const Scenario& c) {
  const Instance& inst = oracle.instance();
  inst.check_length(x, "x");
  auto rec = oracle.best_recourse(x, c.costs);
  if (!rec) throw InfeasibleError("x = " + x.to_string() + " has no recourse action");
  return checked_add(dot(inst.first_stage(), x), rec->cost);
}

Cost two_stage_optimum(const StructureOracle& oracle, const Scenario& c) {
  const Instance& inst = oracle.instance();
  TwoStagePair best = oracle.solve_two_stage(inst.first_stage(), c.costs);
  return checked_add(dot(inst.first_stage(), best.u), dot(c.costs, best.v));
}

Cost regret_of_pair(const StructureOracle& oracle, const BinaryVector& x,
                    const TwoStagePair& pair) {
  const Instance& inst = oracle.instance();
  inst.check_length(x, "x");
  const Scenario cv = scenario_from_v(inst, pair.v);
  const Cost inc = incremental_cost(oracle, x, cv);
  const Cost benchmark = checked_add(dot(inst.first_stage(), pair.u), dot(inst.lower(), pair.v));
  return checked_sub(inc, benchmark);
}

RegretCertificate certificate_from_pair(const StructureOracle& oracle, const BinaryVector& x,
                                        const TwoStagePair& pair) {
  const Instance& inst = oracle.instance();
  RegretCertificate cert;
  cert.first_stage = x;
  cert.witness = pair;
  cert.worst_scenario = scenario_from_v(inst, pair.v);
  auto rec = oracle.best_recourse(x, cert.worst_scenario.costs);
  if (!rec) throw InfeasibleError("x = " + x.to_string() + " has no recourse action");
  cert.best_recourse = rec->y;
  const Cost inc = checked_add(dot(inst.first_stage(), x), rec->cost);
  cert.value = checked_sub(
      inc, checked_add(dot(inst.first_stage(), pair.u), dot(inst.lower(), pair.v)));
  return cert;
}

RegretCertificate max_regret_enum(const StructureOracle& oracle, const BinaryVector& x,
                                  std::uint64_t budget) {
  const Instance& inst = oracle.instance();
  inst.check_length(x, "x");
  if (!oracle.is_first_stage_feasible(x)) {
    throw InfeasibleError("x = " + x.to_string() + " is not a feasible first-stage solution");
  }
  std::optional<TwoStagePair> best;
  Cost best_value = 0;
  oracle.for_each_pair(
      [&](const TwoStagePair& pair) {
        const Cost z = regret_of_pair(oracle, x, pair);
        if (!best || z > best_value) {
          best = pair;
          best_value = z;
        }
      },
      budget);
  if (!best) throw InfeasibleError("the structure has no feasible pair");
  return certificate_from_pair(oracle, x, *best);
}

RegretCertificate StructureOracle::max_regret(const BinaryVector& x) const {
  return max_regret_enum(*this, x);
}

BinaryVector midpoint_heuristic(const StructureOracle& oracle) {
  const Instance& inst = oracle.instance();
  std::vector<Cost> doubled(inst.size());
  std::vector<Cost> mid_sum(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    doubled[i] = checked_mul(2, inst.first_stage()[i]);
    mid_sum[i] = checked_add(inst.lower()[i], inst.upper()[i]);
  }
  return oracle.solve_two_stage(doubled, mid_sum).u;
}

}  // namespace tsr
