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

#include "tsr/oracle/oracle.hpp"

namespace tsr::oracle {
namespace {

std::vector<TwoStagePair> all_pairs(const StructureOracle& structure, std::uint64_t budget) {
  std::vector<TwoStagePair> pairs;
  structure.for_each_pair([&](const TwoStagePair& pair) { pairs.push_back(pair); }, budget);
  if (pairs.empty()) throw InfeasibleError("the structure has no feasible pair");
  return pairs;
}

std::vector<BinaryVector> all_recourses(const StructureOracle& structure, const BinaryVector& x,
                                        std::uint64_t budget) {
  std::vector<BinaryVector> ys;
  structure.for_each_recourse(x, [&](const BinaryVector& y) { ys.push_back(y); }, budget);
  if (ys.empty()) throw InfeasibleError("x = " + x.to_string() + " has no recourse action");
  return ys;
}

void check_size(std::size_t n, std::size_t max_n) {
  if (n > max_n || n >= 63) {
    throw BudgetExceeded("scenario enumeration is limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(n));
  }
}

// Extreme scenario number m in lexicographic order of its bit string.
Scenario extreme(const Instance& inst, std::uint64_t m) {
  const std::size_t n = inst.size();
  Scenario c{std::vector<Cost>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const bool high = (m >> (n - 1 - i)) & 1U;
    c.costs[i] = high ? inst.upper()[i] : inst.lower()[i];
  }
  return c;
}

OptResult best_pair(const Instance& inst, const std::vector<TwoStagePair>& pairs,
                    const Scenario& c) {
  OptResult best{std::numeric_limits<Cost>::max(), {}};
  for (const TwoStagePair& pair : pairs) {
    const Cost value = dot(inst.first_stage(), pair.u) + dot(c.costs, pair.v);
    if (value < best.value) best = {value, pair};
  }
  return best;
}

struct IncValue {
  Cost value = std::numeric_limits<Cost>::max();
  const BinaryVector* y = nullptr;
};

IncValue best_inc(const Instance& inst, const BinaryVector& x,
                  const std::vector<BinaryVector>& ys, const Scenario& c) {
  IncValue best;
  const Cost first = dot(inst.first_stage(), x);
  for (const BinaryVector& y : ys) {
    const Cost value = first + dot(c.costs, y);
    if (value < best.value) best = {value, &y};
  }
  return best;
}

}  // namespace

OptResult brute_opt_pair(const StructureOracle& structure, const Scenario& c,
                         std::uint64_t budget) {
  const Instance& inst = structure.instance();
  if (c.costs.size() != inst.size()) throw InputError("scenario: length mismatch");
  return best_pair(inst, all_pairs(structure, budget), c);
}

Cost brute_opt(const StructureOracle& structure, const Scenario& c, std::uint64_t budget) {
  return brute_opt_pair(structure, c, budget).value;
}

RegretCertificate brute_Z(const StructureOracle& structure, const BinaryVector& x,
                          std::size_t max_n, std::uint64_t budget) {
  const Instance& inst = structure.instance();
  const std::size_t n = inst.size();
  check_size(n, max_n);
  inst.check_length(x, "x");
  if (!structure.is_first_stage_feasible(x)) {
    throw InfeasibleError("x = " + x.to_string() + " is not a feasible first stage");
  }
  const auto pairs = all_pairs(structure, budget);
  const auto ys = all_recourses(structure, x, budget);

  RegretCertificate cert;
  cert.first_stage = x;
  bool have = false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Scenario c = extreme(inst, m);
    const OptResult opt = best_pair(inst, pairs, c);
    const IncValue inc = best_inc(inst, x, ys, c);
    const Cost regret = inc.value - opt.value;
    if (!have || regret > cert.value) {
      have = true;
      cert.value = regret;
      cert.witness = opt.pair;
      cert.worst_scenario = std::move(c);
      cert.best_recourse = *inc.y;
    }
  }
  return cert;
}

TStRBrute brute_tstr(const StructureOracle& structure, std::size_t max_n, std::uint64_t budget) {
  const Instance& inst = structure.instance();
  const std::size_t n = inst.size();
  check_size(n, max_n);
  const auto pairs = all_pairs(structure, budget);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Scenario> scenarios;
  std::vector<Cost> opt;
  scenarios.reserve(count);
  opt.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    scenarios.push_back(extreme(inst, m));
    opt.push_back(best_pair(inst, pairs, scenarios.back()).value);
  }

  TStRBrute best;
  bool have = false;
  structure.for_each_first_stage(
      [&](const BinaryVector& x) {
        const auto ys = all_recourses(structure, x, budget);
        Cost z = std::numeric_limits<Cost>::min();
        for (std::uint64_t m = 0; m < count; ++m) {
          z = std::max(z, best_inc(inst, x, ys, scenarios[m]).value - opt[m]);
          if (have && z >= best.value) return;  // cannot beat the incumbent
        }
        if (!have || z < best.value) {
          have = true;
          best = {z, x};
        }
      },
      budget);
  if (!have) throw InfeasibleError("no feasible first-stage solution");
  return best;
}

}  // namespace tsr::oracle
