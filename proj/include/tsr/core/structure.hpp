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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "tsr/core/instance.hpp"
#include "tsr/core/types.hpp"

namespace tsr {

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000;

struct Recourse {
  BinaryVector y;
  Cost cost = 0;  // c^T y, second stage only
};

// What a problem class must provide so that the generic machinery (regret
// evaluation, row-and-column generation, oracles) can work without knowing
// the structure. Implementations are immutable after construction and safe
// to share across threads.
class StructureOracle {
 public:
  virtual ~StructureOracle() = default;

  virtual const Instance& instance() const = 0;

  // x in X', i.e. R(x) is nonempty.
  virtual bool is_first_stage_feasible(const BinaryVector& x) const = 0;

  // (u, v) in Z.
  virtual bool is_feasible_pair(const TwoStagePair& pair) const = 0;

  // argmin_{y in R(x)} c^T y, or nullopt when R(x) is empty.
  virtual std::optional<Recourse> best_recourse(const BinaryVector& x,
                                                std::span<const Cost> c) const = 0;

  // argmin_{(u,v) in Z} first^T u + second^T v. Throws InfeasibleError when
  // Z is empty.
  virtual TwoStagePair solve_two_stage(std::span<const Cost> first,
                                       std::span<const Cost> second) const = 0;

  // Visits a subfamily of Z that contains a maximizer of Z_(u,v)(x) for
  // every x and a minimizer of every two-stage problem. Throws
  // BudgetExceeded once more than `budget` pairs would be visited.
  virtual void for_each_pair(const std::function<void(const TwoStagePair&)>& visit,
                             std::uint64_t budget) const = 0;

  // Visits every x in X' exactly once.
  virtual void for_each_first_stage(const std::function<void(const BinaryVector&)>& visit,
                                    std::uint64_t budget) const = 0;

  // Visits a subfamily of R(x) that contains a minimizer for every
  // nonnegative cost vector.
  virtual void for_each_recourse(const BinaryVector& x,
                                 const std::function<void(const BinaryVector&)>& visit,
                                 std::uint64_t budget) const = 0;

  // Branch-and-bound support over x. `prefix` fixes indices < depth; the
  // remaining entries of prefix are zero and mean "free".
  //
  // False when no x in X' agrees with the fixed part.
  virtual bool can_extend(const BinaryVector& prefix, std::size_t depth) const = 0;
  // A lower bound on C^T x + min_{y in R(x)} c^T y over all x in X' that
  // agree with the fixed part.
  virtual Cost completion_lower_bound(const BinaryVector& prefix, std::size_t depth,
                                      std::span<const Cost> c) const = 0;

  // Z(x) with certificate. The default enumerates (u, v) pairs.
  virtual RegretCertificate max_regret(const BinaryVector& x) const;
};

}  // namespace tsr
