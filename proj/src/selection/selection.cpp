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

#include "tsr/selection/selection.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "tsr/core/combinatorics.hpp"
#include "tsr/core/regret.hpp"
#include "tsr/kernels/kernels.hpp"
#include "tsr/selection/profiles.hpp"

namespace tsr::selection {
namespace {

// Indices of the k cheapest entries of `pool` under `cost`, ties to the
// lower index.
std::vector<std::size_t> cheapest(std::vector<std::size_t> pool, std::span<const Cost> cost,
                                  std::size_t k) {
  auto less = [&](std::size_t a, std::size_t b) {
    return cost[a] != cost[b] ? cost[a] < cost[b] : a < b;
  };
  if (k < pool.size()) {
    std::nth_element(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end(),
                     less);
    pool.resize(k);
  }
  return pool;
}

void check_p(std::size_t n, std::size_t p) {
  if (p < 1 || p > n) {
    throw InputError("p: need 1 <= p <= n, got p = " + std::to_string(p) +
                     ", n = " + std::to_string(n));
  }
}

}  // namespace

BinaryVector solve_deterministic(std::span<const Cost> costs, std::size_t p) {
  check_p(costs.size(), p);
  std::vector<std::size_t> all(costs.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return BinaryVector::from_indices(costs.size(), cheapest(std::move(all), costs, p));
}

TwoStagePair solve_tst(std::span<const Cost> first, std::span<const Cost> second, std::size_t p) {
  const std::size_t n = first.size();
  if (second.size() != n) throw InputError("solve_tst: cost vectors differ in length");
  check_p(n, p);
  std::vector<Cost> best(n);
  for (std::size_t i = 0; i < n; ++i) best[i] = std::min(first[i], second[i]);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  TwoStagePair pair{BinaryVector(n), BinaryVector(n)};
  for (std::size_t i : cheapest(std::move(all), best, p)) {
    if (best[i] == first[i]) {
      pair.u.set(i);
    } else {
      pair.v.set(i);
    }
  }
  return pair;
}

TwoStagePair solve_tst(const Instance& inst, const Scenario& c) {
  if (c.costs.size() != inst.size()) throw InputError("scenario: length mismatch");
  return solve_tst(inst.first_stage(), c.costs, inst.selection().p);
}

IncResult solve_inc(const Instance& inst, const BinaryVector& x, const Scenario& c) {
  inst.check_length(x, "x");
  if (c.costs.size() != inst.size()) throw InputError("scenario: length mismatch");
  SelectionOracle oracle(inst);
  auto rec = oracle.best_recourse(x, c.costs);
  if (!rec) {
    throw InfeasibleError("x selects " + std::to_string(x.count()) + " items but p = " +
                          std::to_string(inst.selection().p));
  }
  return {std::move(rec->y), checked_add(dot(inst.first_stage(), x), rec->cost)};
}

RegretCertificate max_regret(const Instance& inst, const BinaryVector& x) {
  const std::size_t n = inst.size();
  const std::size_t p = inst.selection().p;
  inst.check_length(x, "x");
  const std::size_t chosen = x.count();
  if (chosen > p) {
    throw InfeasibleError("x selects " + std::to_string(chosen) + " items but p = " +
                          std::to_string(p));
  }
  const Cost first_cost = dot(inst.first_stage(), x);
  const Cost open_slots = static_cast<Cost>(p - chosen);
  const AlphaSet alphas = alpha_set(inst);

  std::vector<Cost> costs(n);
  Cost best_value = std::numeric_limits<Cost>::min();
  Cost best_alpha = 0;
  for (Cost alpha : alphas.values) {
    const Cost excess = kernels::recourse_costs(alpha, inst.lower(), inst.upper(),
                                                inst.first_stage(), x.data(), costs);
    auto nth = costs.begin() + static_cast<std::ptrdiff_t>(p);
    if (p < n) std::nth_element(costs.begin(), nth - 1, costs.end());
    const Cost opt = std::accumulate(costs.begin(), nth, Cost{0});
    const Cost value = first_cost + open_slots * alpha - excess - opt;
    if (value > best_value) {
      best_value = value;
      best_alpha = alpha;
    }
  }

  std::vector<Cost> modified(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Cost lo = inst.lower()[i];
    modified[i] = x[i] ? lo : std::max(lo, std::min(best_alpha, inst.upper()[i]));
  }
  const TwoStagePair witness = solve_tst(inst.first_stage(), modified, p);
  SelectionOracle oracle(inst);
  RegretCertificate cert = certificate_from_pair(oracle, x, witness);
  if (cert.value != best_value) {
    throw Error("max_regret: witness value " + std::to_string(cert.value) +
                " disagrees with alpha bound " + std::to_string(best_value));
  }
  return cert;
}

SelectionOracle::SelectionOracle(const Instance& inst) : inst_(inst), p_(inst.selection().p) {}

bool SelectionOracle::is_first_stage_feasible(const BinaryVector& x) const {
  return x.size() == inst_.size() && x.count() <= p_;
}

bool SelectionOracle::is_feasible_pair(const TwoStagePair& pair) const {
  const std::size_t n = inst_.size();
  if (pair.u.size() != n || pair.v.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (pair.u[i] && pair.v[i]) return false;
  }
  return pair.u.count() + pair.v.count() == p_;
}

std::optional<Recourse> SelectionOracle::best_recourse(const BinaryVector& x,
                                                       std::span<const Cost> c) const {
  const std::size_t n = inst_.size();
  const std::size_t chosen = x.count();
  if (x.size() != n || chosen > p_) return std::nullopt;
  std::vector<std::size_t> open;
  open.reserve(n - chosen);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) open.push_back(i);
  }
  Recourse rec{BinaryVector(n), 0};
  for (std::size_t i : cheapest(std::move(open), c, p_ - chosen)) {
    rec.y.set(i);
    rec.cost = checked_add(rec.cost, c[i]);
  }
  return rec;
}

TwoStagePair SelectionOracle::solve_two_stage(std::span<const Cost> first,
                                              std::span<const Cost> second) const {
  return solve_tst(first, second, p_);
}

void SelectionOracle::for_each_pair(const std::function<void(const TwoStagePair&)>& visit,
                                    std::uint64_t budget) const {
  const std::size_t n = inst_.size();
  if (p_ >= 63) throw BudgetExceeded("pair enumeration: p too large");
  const std::uint64_t total = saturating_mul(binomial(n, p_), std::uint64_t{1} << p_);
  if (total > budget) {
    throw BudgetExceeded("pair enumeration needs " + std::to_string(total) +
                         " pairs, budget is " + std::to_string(budget));
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  TwoStagePair pair{BinaryVector(n), BinaryVector(n)};
  for_each_combination(all, p_, [&](std::span<const std::size_t> items) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p_); ++mask) {
      pair.u = BinaryVector(n);
      pair.v = BinaryVector(n);
      for (std::size_t j = 0; j < items.size(); ++j) {
        if ((mask >> j) & 1U) {
          pair.u.set(items[j]);
        } else {
          pair.v.set(items[j]);
        }
      }
      visit(pair);
    }
  });
}

void SelectionOracle::for_each_first_stage(const std::function<void(const BinaryVector&)>& visit,
                                           std::uint64_t budget) const {
  const std::size_t n = inst_.size();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= p_; ++k) total = saturating_add(total, binomial(n, k));
  if (total > budget) {
    throw BudgetExceeded("first-stage enumeration needs " + std::to_string(total) +
                         " solutions, budget is " + std::to_string(budget));
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t k = 0; k <= p_; ++k) {
    for_each_combination(all, k, [&](std::span<const std::size_t> items) {
      visit(BinaryVector::from_indices(n, items));
    });
  }
}

void SelectionOracle::for_each_recourse(const BinaryVector& x,
                                        const std::function<void(const BinaryVector&)>& visit,
                                        std::uint64_t budget) const {
  const std::size_t n = inst_.size();
  const std::size_t chosen = x.count();
  if (chosen > p_) return;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) open.push_back(i);
  }
  const std::uint64_t total = binomial(open.size(), p_ - chosen);
  if (total > budget) {
    throw BudgetExceeded("recourse enumeration needs " + std::to_string(total) + " actions");
  }
  for_each_combination(open, p_ - chosen, [&](std::span<const std::size_t> items) {
    visit(BinaryVector::from_indices(n, items));
  });
}

bool SelectionOracle::can_extend(const BinaryVector& prefix, std::size_t /*depth*/) const {
  return prefix.count() <= p_;
}

Cost SelectionOracle::completion_lower_bound(const BinaryVector& prefix, std::size_t depth,
                                             std::span<const Cost> c) const {
  const std::size_t n = inst_.size();
  const auto first = inst_.first_stage();
  std::size_t fixed_in = 0;
  Cost bound = 0;
  std::vector<Cost> open;
  open.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < depth) {
      if (prefix[i]) {
        ++fixed_in;
        bound += first[i];
      } else {
        open.push_back(c[i]);
      }
    } else {
      open.push_back(std::min(first[i], c[i]));
    }
  }
  if (fixed_in > p_) return std::numeric_limits<Cost>::max() / 4;
  const std::size_t need = p_ - fixed_in;
  auto nth = open.begin() + static_cast<std::ptrdiff_t>(need);
  if (need > 0 && need < open.size()) std::nth_element(open.begin(), nth - 1, open.end());
  return bound + std::accumulate(open.begin(), nth, Cost{0});
}

RegretCertificate SelectionOracle::max_regret(const BinaryVector& x) const {
  return selection::max_regret(inst_, x);
}

}  // namespace tsr::selection
