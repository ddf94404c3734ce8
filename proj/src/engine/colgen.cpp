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


#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "tsr/core/regret.hpp"
#include "tsr/engine/engine.hpp"

namespace tsr::engine {

bool CutPool::add(const TwoStagePair& pair) {
  if (contains(pair)) return false;
  pairs_.push_back(pair);
  return true;
}

bool CutPool::contains(const TwoStagePair& pair) const {
  return std::find(pairs_.begin(), pairs_.end(), pair) != pairs_.end();
}

namespace {

struct Cut {
  Scenario scenario;  // c_v
  Cost offset = 0;    // C^T u + lo^T v
};

}  // namespace

MasterResult master_solve(const StructureOracle& oracle, const CutPool& pool,
                          std::uint64_t node_budget) {
  if (pool.empty()) throw InputError("master_solve: the cut pool is empty");
  const Instance& inst = oracle.instance();
  std::vector<Cut> cuts;
  cuts.reserve(pool.size());
  for (const TwoStagePair& pair : pool.pairs()) {
    cuts.push_back({scenario_from_v(inst, pair.v),
                    dot(inst.first_stage(), pair.u) + dot(inst.lower(), pair.v)});
  }

  BnbProblem problem;
  problem.n = inst.size();
  problem.can_extend = [&](const BinaryVector& prefix, std::size_t depth) {
    return oracle.can_extend(prefix, depth);
  };
  problem.objective = [&](const BinaryVector& x) -> std::optional<Cost> {
    if (!oracle.is_first_stage_feasible(x)) return std::nullopt;
    const Cost first = dot(inst.first_stage(), x);
    Cost worst = std::numeric_limits<Cost>::min();
    for (const Cut& cut : cuts) {
      const auto rec = oracle.best_recourse(x, cut.scenario.costs);
      if (!rec) return std::nullopt;
      worst = std::max(worst, first + rec->cost - cut.offset);
    }
    return worst;
  };
  problem.lower_bound = [&](const BinaryVector& prefix, std::size_t depth) {
    Cost bound = std::numeric_limits<Cost>::min();
    for (const Cut& cut : cuts) {
      bound = std::max(bound, oracle.completion_lower_bound(prefix, depth, cut.scenario.costs) -
                                  cut.offset);
    }
    return bound;
  };

  BnbOptions options;
  options.node_budget = node_budget;
  BnbResult found = bnb_minimize(problem, options);
  if (!found.found) throw InfeasibleError("master problem has no feasible first-stage solution");
  return {std::move(found.x), found.value, found.nodes};
}

Separation separate(const StructureOracle& oracle, const BinaryVector& x) {
  RegretCertificate cert = oracle.max_regret(x);
  return {cert.witness, cert.value, std::move(cert)};
}

ColGenResult solve_colgen(const StructureOracle& oracle, const ColGenOptions& options) {
  const Instance& inst = oracle.instance();
  ColGenResult result;
  result.pool.add(oracle.solve_two_stage(inst.first_stage(), inst.upper()));

  ColGenState& state = result.state;
  state.lower_bound = 0;  // Z(x) >= 0 for every x
  state.upper_bound = std::numeric_limits<Cost>::max();

  while (true) {
    if (state.iterations >= options.iteration_cap) {
      throw BudgetExceeded("row-and-column generation hit its iteration cap of " +
                           std::to_string(options.iteration_cap));
    }
    ++state.iterations;
    const MasterResult master = master_solve(oracle, result.pool, options.node_budget);
    state.lower_bound = std::max(state.lower_bound, master.value);
    const Separation sep = separate(oracle, master.x);
    if (sep.value < state.upper_bound) {
      state.upper_bound = sep.value;
      state.incumbent = master.x;
    }
    if (options.trace) {
      *options.trace << state.iterations << '\t' << state.lower_bound << '\t'
                     << state.upper_bound << '\t' << result.pool.size() << '\n';
    }
    if (state.upper_bound - state.lower_bound <= options.tol) break;
    if (!result.pool.add(sep.pair)) {
      throw Error("separation returned a pair already in the pool while the gap is " +
                  std::to_string(state.upper_bound - state.lower_bound));
    }
  }
  result.value = state.upper_bound;
  result.x = state.incumbent;
  return result;
}

}  // namespace tsr::engine
