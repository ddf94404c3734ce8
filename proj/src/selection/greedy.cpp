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
#include <numeric>
#include <string>
#include <vector>

#include "tsr/core/combinatorics.hpp"
#include "tsr/kernels/kernels.hpp"
#include "tsr/selection/algorithms.hpp"

namespace tsr::selection {
namespace {

std::vector<std::vector<std::size_t>> seed_sets(const Instance& inst,
                                                const GreedyOptions& options) {
  const std::size_t n = inst.size();
  const std::size_t p = inst.selection().p;
  if (!options.seeds.empty()) {
    for (const auto& seed : options.seeds) {
      if (seed.size() > p) throw InputError("greedy seed has more than p items");
      std::vector<bool> seen(n, false);
      for (std::size_t i : seed) {
        if (i >= n) throw InputError("greedy seed index " + std::to_string(i) + " out of range");
        if (seen[i]) throw InputError("greedy seed repeats index " + std::to_string(i));
        seen[i] = true;
      }
    }
    return options.seeds;
  }
  if (options.L > p) throw InputError("greedy: need L <= p");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> seeds;
  for (std::size_t k = 0; k <= options.L; ++k) {
    for_each_combination(all, k, [&](std::span<const std::size_t> items) {
      seeds.emplace_back(items.begin(), items.end());
    });
  }
  return seeds;
}

struct Run {
  Cost value = 0;
  BinaryVector x;
};

Run descend(const CoeffTable& table, std::size_t p, std::span<const std::size_t> seed,
            bool prune, std::uint64_t& evaluations) {
  const std::size_t n = table.item_count();
  BinaryVector x = BinaryVector::from_indices(n, seed);
  std::vector<Cost> acc = table.nu;
  for (std::size_t i : seed) kernels::accumulate(acc, table.item_row(i));
  Cost best_value = kernels::max_value(acc);
  ++evaluations;

  std::vector<bool> pruned(n, false);
  std::vector<Cost> trial(acc.size());
  std::size_t size = seed.size();
  bool improve = true;
  while (improve && size < p) {
    improve = false;
    const Cost start = best_value;
    std::size_t best_item = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] || pruned[i]) continue;
      trial = acc;
      kernels::accumulate(trial, table.item_row(i));
      const Cost value = kernels::max_value(trial);
      ++evaluations;
      if (value <= best_value) {
        best_value = value;
        best_item = i;
        improve = true;
      } else if (prune && value > start) {
        // Supermodularity: j cannot improve any superset either.
        pruned[i] = true;
      }
    }
    if (improve) {
      x.set(best_item);
      kernels::accumulate(acc, table.item_row(best_item));
      ++size;
    }
  }
  return {best_value, std::move(x)};
}

}  // namespace

GreedyResult solve_greedy(const Instance& inst, const GreedyOptions& options) {
  const std::size_t p = inst.selection().p;
  const auto seeds = seed_sets(inst, options);
  GreedyResult result;
  result.value = std::numeric_limits<Cost>::max();
  bool have = false;
  const std::vector<PiProfile> profiles =
      options.profile ? std::vector<PiProfile>{make_profile(inst, options.profile->first,
                                                            options.profile->second)}
                      : enumerate_pi_profiles(inst);
  for (const PiProfile& profile : profiles) {
    const CoeffTable table = coefficients(inst, profile);
    for (const auto& seed : seeds) {
      Run run = descend(table, p, seed, options.prune, result.evaluations);
      if (run.value <= result.value) {
        result.value = run.value;
        result.x = std::move(run.x);
        have = true;
      }
    }
  }
  if (!have) throw Error("greedy: no profile was evaluated");
  return result;
}

}  // namespace tsr::selection
