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


// Exact and heuristic solvers for two-stage minmax-regret selection built
// on the price-profile decomposition.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsr/core/instance.hpp"
#include "tsr/core/types.hpp"
#include "tsr/engine/engine.hpp"
#include "tsr/selection/profiles.hpp"

namespace tsr::selection {

struct PPiOptions {
  std::uint64_t node_budget = engine::kDefaultNodeBudget;
  // Only values strictly below the cutoff are reported.
  std::optional<Cost> cutoff;
};

struct PPiResult {
  bool found = false;
  Cost value = 0;
  BinaryVector x;
  std::uint64_t nodes = 0;
};

// P(pi) = min over |X| <= p of F(X), by branch-and-bound.
PPiResult solve_P_pi(const Instance& inst, const PiProfile& profile,
                     const PPiOptions& options = {});
PPiResult solve_P_pi(const Instance& inst, const CoeffTable& table,
                     const PPiOptions& options = {});

struct ExactOptions {
  std::size_t max_n = 24;
  std::uint64_t node_budget = engine::kDefaultNodeBudget;
};

struct ExactResult {
  Cost value = 0;
  BinaryVector x;
  RegretCertificate certificate;
  PiProfile profile;  // the profile that attained the optimum
  std::uint64_t nodes = 0;
};

// min over profiles of P(pi). Among equal values the first profile in
// (ck, cl) order wins.
ExactResult solve_exact(const Instance& inst, const ExactOptions& options = {});

struct GreedyOptions {
  std::size_t L = 0;  // seeds: every subset with at most L items
  bool prune = true;
  // Explicit seeds; when nonempty they replace the L-subsets.
  std::vector<std::vector<std::size_t>> seeds;
  // Restrict the run to the profile with this (ck, cl).
  std::optional<std::pair<Cost, Cost>> profile;
};

struct GreedyResult {
  Cost value = 0;  // F value of the returned set under its profile
  BinaryVector x;
  std::uint64_t evaluations = 0;
};

// Greedy descent on F for every profile, using the pseudo-code's <= rules:
// within a pass a later item displaces an earlier one of equal value, and
// across profiles a later equal value replaces the incumbent.
GreedyResult solve_greedy(const Instance& inst, const GreedyOptions& options = {});

// Optimal first stage when p = n: take i iff C_i - min{C_i, lo_i} <=
// hi_i - min{C_i, hi_i}. Throws InputError when p != n.
BinaryVector solve_p_equals_n(const Instance& inst);

struct FewDistinctOptions {
  std::size_t K = 3;
  std::uint64_t composition_budget = 1'000'000;
};

struct FewDistinctResult {
  Cost value = 0;
  BinaryVector x;
  std::uint64_t compositions = 0;
};

// Exact when at least two of {C_i}, {lo_i}, {hi_i} take at most K distinct
// values. Throws InputError otherwise.
FewDistinctResult solve_few_distinct(const Instance& inst, const FewDistinctOptions& options = {});

}  // namespace tsr::selection
