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

#include "tsr/selection/algorithms.hpp"
#include "tsr/selection/selection.hpp"

namespace tsr::selection {

PPiResult solve_P_pi(const Instance& inst, const CoeffTable& table, const PPiOptions& options) {
  const std::size_t n = inst.size();
  const std::size_t p = inst.selection().p;
  const std::size_t m = table.alpha_count();

  // negative_tail[d * m + k] = sum over i >= d of min{0, omega_i(alpha_k)}
  std::vector<Cost> negative_tail((n + 1) * m, 0);
  for (std::size_t d = n; d-- > 0;) {
    for (std::size_t k = 0; k < m; ++k) {
      negative_tail[d * m + k] =
          negative_tail[(d + 1) * m + k] + std::min<Cost>(0, table.omega[k][d]);
    }
  }

  engine::BnbProblem problem;
  problem.n = n;
  problem.can_extend = [p](const BinaryVector& prefix, std::size_t) {
    return prefix.count() <= p;
  };
  problem.objective = [&](const BinaryVector& x) -> std::optional<Cost> {
    return eval_F(table, x);
  };
  problem.lower_bound = [&](const BinaryVector& prefix, std::size_t depth) {
    Cost bound = std::numeric_limits<Cost>::min();
    for (std::size_t k = 0; k < m; ++k) {
      Cost acc = table.nu[k] + negative_tail[depth * m + k];
      for (std::size_t i = 0; i < depth; ++i) {
        if (prefix[i]) acc += table.omega[k][i];
      }
      bound = std::max(bound, acc);
    }
    return bound;
  };

  engine::BnbOptions bnb;
  bnb.node_budget = options.node_budget;
  bnb.cutoff = options.cutoff;
  engine::BnbResult r = engine::bnb_minimize(problem, bnb);
  return {r.found, r.value, std::move(r.x), r.nodes};
}

PPiResult solve_P_pi(const Instance& inst, const PiProfile& profile, const PPiOptions& options) {
  return solve_P_pi(inst, coefficients(inst, profile), options);
}

ExactResult solve_exact(const Instance& inst, const ExactOptions& options) {
  if (inst.size() > options.max_n) {
    throw BudgetExceeded("solve_exact is limited to n <= " + std::to_string(options.max_n) +
                         ", got n = " + std::to_string(inst.size()));
  }
  ExactResult best;
  bool have = false;
  for (const PiProfile& profile : enumerate_pi_profiles(inst)) {
    PPiOptions sub;
    sub.node_budget = options.node_budget;
    if (have) sub.cutoff = best.value;
    PPiResult r = solve_P_pi(inst, profile, sub);
    best.nodes += r.nodes;
    if (!r.found) continue;
    have = true;
    best.value = r.value;
    best.x = std::move(r.x);
    best.profile = profile;
  }
  if (!have) throw Error("solve_exact: no profile produced a solution");
  best.certificate = max_regret(inst, best.x);
  if (best.certificate.value != best.value) {
    throw Error("solve_exact: Z(x) = " + std::to_string(best.certificate.value) +
                " disagrees with the decomposition value " + std::to_string(best.value));
  }
  return best;
}

}  // namespace tsr::selection
