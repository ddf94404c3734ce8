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
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tsr/core/combinatorics.hpp"
#include "tsr/selection/algorithms.hpp"
#include "tsr/selection/selection.hpp"

namespace tsr::selection {

BinaryVector solve_p_equals_n(const Instance& inst) {
  const std::size_t n = inst.size();
  if (inst.selection().p != n) {
    throw InputError("solve_p_equals_n needs p = n, got p = " +
                     std::to_string(inst.selection().p) + ", n = " + std::to_string(n));
  }
  const auto first = inst.first_stage();
  BinaryVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Cost lo = inst.lower()[i];
    const Cost hi = inst.upper()[i];
    if (first[i] - std::min(first[i], lo) <= hi - std::min(first[i], hi)) x.set(i);
  }
  return x;
}

namespace {

std::size_t distinct_count(std::span<const Cost> values) {
  return std::set<Cost>(values.begin(), values.end()).size();
}

// Number of vectors l with 0 <= l_j <= cap_j and sum l_j <= p, saturating.
std::uint64_t count_compositions(const std::vector<std::size_t>& caps, std::size_t p) {
  std::vector<std::uint64_t> ways(p + 1, 0);
  ways[0] = 1;
  for (std::size_t cap : caps) {
    std::vector<std::uint64_t> next(p + 1, 0);
    for (std::size_t s = 0; s <= p; ++s) {
      if (ways[s] == 0) continue;
      for (std::size_t l = 0; l <= cap && s + l <= p; ++l) {
        next[s + l] = saturating_add(next[s + l], ways[s]);
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways) total = saturating_add(total, w);
  return total;
}

}  // namespace

FewDistinctResult solve_few_distinct(const Instance& inst, const FewDistinctOptions& options) {
  const std::size_t n = inst.size();
  const std::size_t p = inst.selection().p;
  const auto first = inst.first_stage();
  const auto lo = inst.lower();
  const auto hi = inst.upper();
  const bool few_first = distinct_count(first) <= options.K;
  const bool few_lo = distinct_count(lo) <= options.K;
  const bool few_hi = distinct_count(hi) <= options.K;

  // Group by the two small value sets; order each group by the free
  // coordinate, best candidate first.
  std::span<const Cost> key_a;
  std::span<const Cost> key_b;
  std::function<bool(std::size_t, std::size_t)> before;
  if (few_first && few_lo) {
    key_a = first;
    key_b = lo;
    before = [&](std::size_t a, std::size_t b) { return hi[a] != hi[b] ? hi[a] > hi[b] : a < b; };
  } else if (few_first && few_hi) {
    key_a = first;
    key_b = hi;
    before = [&](std::size_t a, std::size_t b) { return lo[a] != lo[b] ? lo[a] > lo[b] : a < b; };
  } else if (few_lo && few_hi) {
    key_a = lo;
    key_b = hi;
    before = [&](std::size_t a, std::size_t b) {
      return first[a] != first[b] ? first[a] < first[b] : a < b;
    };
  } else {
    throw InputError("solve_few_distinct: fewer than two of C, lo, hi have at most " +
                     std::to_string(options.K) + " distinct values");
  }

  std::map<std::pair<Cost, Cost>, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < n; ++i) by_key[{key_a[i], key_b[i]}].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> caps;
  for (auto& [key, items] : by_key) {
    std::sort(items.begin(), items.end(), before);
    caps.push_back(std::min(items.size(), p));
    groups.push_back(std::move(items));
  }

  const std::uint64_t total = count_compositions(caps, p);
  if (total > options.composition_budget) {
    throw BudgetExceeded("solve_few_distinct needs " + std::to_string(total) +
                         " compositions, budget is " + std::to_string(options.composition_budget));
  }

  FewDistinctResult result;
  result.value = std::numeric_limits<Cost>::max();
  BinaryVector x(n);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t g, std::size_t left) {
    if (g == groups.size()) {
      ++result.compositions;
      const Cost value = max_regret(inst, x).value;
      if (value < result.value) {
        result.value = value;
        result.x = x;
      }
      return;
    }
    walk(g + 1, left);
    for (std::size_t l = 1; l <= caps[g] && l <= left; ++l) {
      x.set(groups[g][l - 1]);
      walk(g + 1, left - l);
    }
    for (std::size_t l = 1; l <= caps[g] && l <= left; ++l) x.set(groups[g][l - 1], false);
  };
  walk(0, p);
  return result;
}

}  // namespace tsr::selection
