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


// Exact 0-1 branch-and-bound and the row-and-column generation loop.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "tsr/core/structure.hpp"
#include "tsr/core/types.hpp"

namespace tsr::engine {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::size_t kDefaultIterationCap = 10'000;

// A minimization over x in {0,1}^n. Every callback sees a prefix vector
// whose entries at indices >= depth are zero and mean "not yet fixed".
struct BnbProblem {
  std::size_t n = 0;
  // False prunes the subtree. May be empty (always true).
  std::function<bool(const BinaryVector& prefix, std::size_t depth)> can_extend;
  // Value of a complete x, or nullopt when x is infeasible.
  std::function<std::optional<Cost>(const BinaryVector& x)> objective;
  // Admissible bound on the objective of every completion. May be empty.
  std::function<Cost(const BinaryVector& prefix, std::size_t depth)> lower_bound;
};

struct BnbOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Only solutions strictly below the cutoff are reported.
  std::optional<Cost> cutoff;
};

struct BnbResult {
  bool found = false;
  Cost value = 0;
  BinaryVector x;
  std::uint64_t nodes = 0;
};

// Depth-first search, ascending index, 0-branch first. The incumbent only
// changes on strict improvement, so the first optimum in that order wins.
// Throws BudgetExceeded when more than node_budget nodes are opened.
BnbResult bnb_minimize(const BnbProblem& problem, const BnbOptions& options = {});

class CutPool {
 public:
  // False when the pair is already present.
  bool add(const TwoStagePair& pair);
  bool contains(const TwoStagePair& pair) const;
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<TwoStagePair>& pairs() const { return pairs_; }

 private:
  std::vector<TwoStagePair> pairs_;
};

struct MasterResult {
  BinaryVector x;
  Cost value = 0;
  std::uint64_t nodes = 0;
};

// min over x in X' of max over the pool of Z_(u,v)(x), solved exactly.
MasterResult master_solve(const StructureOracle& oracle, const CutPool& pool,
                          std::uint64_t node_budget = kDefaultNodeBudget);

struct Separation {
  TwoStagePair pair;
  Cost value = 0;
  RegretCertificate certificate;
};

// Z(x) and a maximizing pair via the structure's max-regret routine.
Separation separate(const StructureOracle& oracle, const BinaryVector& x);

struct ColGenState {
  Cost lower_bound = 0;
  Cost upper_bound = 0;
  BinaryVector incumbent;
  std::size_t iterations = 0;
};

struct ColGenOptions {
  Cost tol = 0;
  std::size_t iteration_cap = kDefaultIterationCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Receives "iteration\tLB\tUB\tpool" lines when set.
  std::ostream* trace = nullptr;
};

struct ColGenResult {
  Cost value = 0;
  BinaryVector x;
  ColGenState state;
  CutPool pool;
};

ColGenResult solve_colgen(const StructureOracle& oracle, const ColGenOptions& options = {});

}  // namespace tsr::engine
