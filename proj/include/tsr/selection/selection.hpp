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

// Selection: choose exactly p of n items. X' = {x : |x| <= p}.

#pragma once

#include <cstddef>
#include <span>

#include "tsr/core/instance.hpp"
#include "tsr/core/structure.hpp"
#include "tsr/core/types.hpp"

namespace tsr::selection {

// The p cheapest items; equal costs go to the lower index.
BinaryVector solve_deterministic(std::span<const Cost> costs, std::size_t p);

// Two-stage selection: item i costs min(first_i, second_i), the p cheapest
// are taken, and an item goes to stage one iff its cheaper price is first_i.
TwoStagePair solve_tst(std::span<const Cost> first, std::span<const Cost> second, std::size_t p);
TwoStagePair solve_tst(const Instance& inst, const Scenario& c);

struct IncResult {
  BinaryVector y;
  Cost value = 0;  // Inc(x, c) = C^T x + c^T y
};

// Best completion of x under c. Throws InfeasibleError when |x| > p.
IncResult solve_inc(const Instance& inst, const BinaryVector& x, const Scenario& c);

// Z(x) in O(n^2): for every alpha in the alpha set solve a two-stage
// selection with modified second-stage costs and keep the best alpha.
// Ties keep the smallest alpha.
RegretCertificate max_regret(const Instance& inst, const BinaryVector& x);

class SelectionOracle final : public StructureOracle {
 public:
  // `inst` must outlive the oracle.
  explicit SelectionOracle(const Instance& inst);

  const Instance& instance() const override { return inst_; }
  bool is_first_stage_feasible(const BinaryVector& x) const override;
  bool is_feasible_pair(const TwoStagePair& pair) const override;
  std::optional<Recourse> best_recourse(const BinaryVector& x,
                                        std::span<const Cost> c) const override;
  TwoStagePair solve_two_stage(std::span<const Cost> first,
                               std::span<const Cost> second) const override;
  void for_each_pair(const std::function<void(const TwoStagePair&)>& visit,
                     std::uint64_t budget) const override;
  void for_each_first_stage(const std::function<void(const BinaryVector&)>& visit,
                            std::uint64_t budget) const override;
  void for_each_recourse(const BinaryVector& x,
                         const std::function<void(const BinaryVector&)>& visit,
                         std::uint64_t budget) const override;
  bool can_extend(const BinaryVector& prefix, std::size_t depth) const override;
  Cost completion_lower_bound(const BinaryVector& prefix, std::size_t depth,
                              std::span<const Cost> c) const override;
  RegretCertificate max_regret(const BinaryVector& x) const override;

 private:
  const Instance& inst_;
  std::size_t p_;
};

}  // namespace tsr::selection
