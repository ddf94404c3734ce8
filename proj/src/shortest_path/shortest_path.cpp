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


#include <limits>
#include <set>
#include <string>

#include "tsr/core/regret.hpp"
#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr::sp {
namespace {

constexpr Cost kUnreachable = std::numeric_limits<Cost>::max() / 4;

void check_scenario_length(const Instance& inst, std::span<const Cost> c) {
  if (c.size() != inst.size()) throw InputError("scenario: length mismatch");
}

std::uint64_t subsets_of_paths(const PathCatalog& catalog) {
  std::uint64_t total = 0;
  for (const auto& path : catalog.paths()) {
    if (path.size() >= 63) return std::numeric_limits<std::uint64_t>::max();
    total += std::uint64_t{1} << path.size();
  }
  return total;
}

bool contains(const BinaryVector& outer, const BinaryVector& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] && !outer[i]) return false;
  }
  return true;
}

std::optional<Recourse> relaxed_recourse(const GraphSpec& g, const BinaryVector& x,
                                         std::span<const Cost> c) {
  std::vector<Cost> cost(c.begin(), c.end());
  for (std::size_t a = 0; a < cost.size(); ++a) {
    if (x[a]) cost[a] = 0;
  }
  const PathResult path = shortest_path(g, cost);
  if (!path.reachable) return std::nullopt;
  Recourse rec{BinaryVector(x.size()), 0};
  for (std::size_t a : path.arcs) {
    if (x[a]) continue;
    rec.y.set(a);
    rec.cost += c[a];
  }
  return rec;
}

std::optional<Recourse> simple_recourse(const PathCatalog& catalog, const BinaryVector& x,
                                        std::span<const Cost> c) {
  std::optional<Recourse> best;
  for (const BinaryVector& mask : catalog.masks()) {
    if (!contains(mask, x)) continue;
    Cost cost = 0;
    for (std::size_t a = 0; a < mask.size(); ++a) {
      if (mask[a] && !x[a]) cost += c[a];
    }
    if (!best || cost < best->cost) {
      Recourse rec{BinaryVector(x.size()), cost};
      for (std::size_t a = 0; a < mask.size(); ++a) {
        if (mask[a] && !x[a]) rec.y.set(a);
      }
      best = std::move(rec);
    }
  }
  return best;
}

}  // namespace

TwoStagePair solve_tst_sp(const Instance& inst, const Scenario& c) {
  check_scenario_length(inst, c.costs);
  ShortestPathOracle oracle(inst);
  return oracle.solve_two_stage(inst.first_stage(), c.costs);
}

SpIncResult solve_inc_relaxed(const Instance& inst, const BinaryVector& x, const Scenario& c) {
  const GraphSpec& g = inst.graph();
  if (g.variant != PathVariant::Relaxed) throw InputError("solve_inc_relaxed: variant is not relaxed");
  inst.check_length(x, "x");
  check_scenario_length(inst, c.costs);
  auto rec = relaxed_recourse(g, x, c.costs);
  if (!rec) throw InfeasibleError("t is not reachable from s");
  return {std::move(rec->y), dot(inst.first_stage(), x) + rec->cost};
}

SpIncResult solve_inc_simple(const Instance& inst, const BinaryVector& x, const Scenario& c,
                             std::size_t cap) {
  const GraphSpec& g = inst.graph();
  if (g.variant != PathVariant::Simple) throw InputError("solve_inc_simple: variant is not simple");
  inst.check_length(x, "x");
  check_scenario_length(inst, c.costs);
  const PathCatalog catalog = PathCatalog::build(g, cap);
  auto rec = simple_recourse(catalog, x, c.costs);
  if (!rec) throw InfeasibleError("no simple s-t path contains x = " + x.to_string());
  return {std::move(rec->y), dot(inst.first_stage(), x) + rec->cost};
}

ShortestPathOracle::ShortestPathOracle(const Instance& inst, std::size_t cap)
    : inst_(inst), cap_(cap) {
  (void)inst.graph();  // throws for a selection instance
}

const PathCatalog& ShortestPathOracle::catalog() const {
  std::call_once(catalog_once_, [this] {
    catalog_ = std::make_unique<PathCatalog>(PathCatalog::build(graph(), cap_));
  });
  return *catalog_;
}

bool ShortestPathOracle::is_first_stage_feasible(const BinaryVector& x) const {
  if (x.size() != inst_.size()) return false;
  if (relaxed()) {
    const std::vector<std::uint8_t> all(inst_.size(), 1);
    return connects(graph(), all);
  }
  for (const BinaryVector& mask : catalog().masks()) {
    if (contains(mask, x)) return true;
  }
  return false;
}

bool ShortestPathOracle::is_feasible_pair(const TwoStagePair& pair) const {
  const std::size_t n = inst_.size();
  if (pair.u.size() != n || pair.v.size() != n) return false;
  BinaryVector both(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (pair.u[a] && pair.v[a]) return false;
    if (pair.u[a] || pair.v[a]) both.set(a);
  }
  return relaxed() ? connects(graph(), both.data()) : is_simple_path(graph(), both);
}

std::optional<Recourse> ShortestPathOracle::best_recourse(const BinaryVector& x,
                                                          std::span<const Cost> c) const {
  if (x.size() != inst_.size()) return std::nullopt;
  return relaxed() ? relaxed_recourse(graph(), x, c) : simple_recourse(catalog(), x, c);
}

TwoStagePair ShortestPathOracle::solve_two_stage(std::span<const Cost> first,
                                                 std::span<const Cost> second) const {
  const std::size_t n = inst_.size();
  std::vector<Cost> best(n);
  for (std::size_t a = 0; a < n; ++a) best[a] = std::min(first[a], second[a]);
  const PathResult path = shortest_path(graph(), best);
  if (!path.reachable) throw InfeasibleError("t is not reachable from s");
  TwoStagePair pair{BinaryVector(n), BinaryVector(n)};
  for (std::size_t a : path.arcs) {
    if (best[a] == first[a]) {
      pair.u.set(a);
    } else {
      pair.v.set(a);
    }
  }
  return pair;
}

void ShortestPathOracle::for_each_pair(const std::function<void(const TwoStagePair&)>& visit,
                                       std::uint64_t budget) const {
  const std::size_t n = inst_.size();
  const std::uint64_t total = subsets_of_paths(catalog());
  if (total > budget) {
    throw BudgetExceeded("pair enumeration needs " + std::to_string(total) +
                         " pairs, budget is " + std::to_string(budget));
  }
  for (const auto& path : catalog().paths()) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << path.size()); ++mask) {
      TwoStagePair pair{BinaryVector(n), BinaryVector(n)};
      for (std::size_t j = 0; j < path.size(); ++j) {
        if ((mask >> j) & 1U) {
          pair.u.set(path[j]);
        } else {
          pair.v.set(path[j]);
        }
      }
      visit(pair);
    }
  }
}

void ShortestPathOracle::for_each_first_stage(
    const std::function<void(const BinaryVector&)>& visit, std::uint64_t budget) const {
  const std::size_t n = inst_.size();
  if (relaxed()) {
    if (n >= 63 || (std::uint64_t{1} << n) > budget) {
      throw BudgetExceeded("first-stage enumeration over " + std::to_string(n) +
                           " arcs exceeds the budget of " + std::to_string(budget));
    }
    if (!is_first_stage_feasible(BinaryVector(n))) return;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      BinaryVector x(n);
      for (std::size_t a = 0; a < n; ++a) {
        if ((mask >> a) & 1U) x.set(a);
      }
      visit(x);
    }
    return;
  }
  const std::uint64_t total = subsets_of_paths(catalog());
  if (total > budget) {
    throw BudgetExceeded("first-stage enumeration needs " + std::to_string(total) +
                         " subsets, budget is " + std::to_string(budget));
  }
  std::set<BinaryVector> seen;
  for (const auto& path : catalog().paths()) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << path.size()); ++mask) {
      BinaryVector x(n);
      for (std::size_t j = 0; j < path.size(); ++j) {
        if ((mask >> j) & 1U) x.set(path[j]);
      }
      seen.insert(std::move(x));
    }
  }
  for (const BinaryVector& x : seen) visit(x);
}

void ShortestPathOracle::for_each_recourse(const BinaryVector& x,
                                           const std::function<void(const BinaryVector&)>& visit,
                                           std::uint64_t budget) const {
  if (catalog().size() > budget) {
    throw BudgetExceeded("recourse enumeration exceeds the budget of " + std::to_string(budget));
  }
  std::set<BinaryVector> seen;
  for (const BinaryVector& mask : catalog().masks()) {
    if (!relaxed() && !contains(mask, x)) continue;
    BinaryVector y(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (mask[a] && !x[a]) y.set(a);
    }
    if (seen.insert(y).second) visit(y);
  }
}

bool ShortestPathOracle::can_extend(const BinaryVector& prefix, std::size_t depth) const {
  if (relaxed()) return is_first_stage_feasible(BinaryVector(inst_.size()));
  for (const BinaryVector& mask : catalog().masks()) {
    bool ok = true;
    for (std::size_t a = 0; a < depth && ok; ++a) ok = !prefix[a] || mask[a];
    if (ok) return true;
  }
  return false;
}

Cost ShortestPathOracle::completion_lower_bound(const BinaryVector& prefix, std::size_t depth,
                                                std::span<const Cost> c) const {
  const std::size_t n = inst_.size();
  const auto first = inst_.first_stage();
  Cost fixed = 0;
  std::vector<Cost> cost(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (a < depth) {
      if (prefix[a]) {
        fixed += first[a];
        cost[a] = 0;
      } else {
        cost[a] = c[a];
      }
    } else {
      cost[a] = std::min(first[a], c[a]);
    }
  }
  const PathResult path = shortest_path(graph(), cost);
  return path.reachable ? fixed + path.cost : kUnreachable;
}

RegretCertificate max_regret_sp(const Instance& inst, const BinaryVector& x,
                                std::uint64_t budget) {
  ShortestPathOracle oracle(inst);
  return max_regret_enum(oracle, x, budget);
}

TStRResult solve_tstr_sp(const Instance& inst, std::uint64_t budget) {
  ShortestPathOracle oracle(inst);
  TStRResult result;
  bool have = false;
  oracle.for_each_first_stage(
      [&](const BinaryVector& x) {
        ++result.evaluated;
        const Cost value = max_regret_enum(oracle, x, budget).value;
        if (!have || value < result.value) {
          have = true;
          result.value = value;
          result.x = x;
        }
      },
      budget);
  if (!have) throw InfeasibleError("t is not reachable from s");
  return result;
}

}  // namespace tsr::sp
