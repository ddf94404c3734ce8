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


// Two-stage minmax-regret shortest path: graph helpers, polynomial TSt and
// relaxed Inc solvers, catalog-based exact routines and the reduction
// gadgets.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "tsr/core/instance.hpp"
#include "tsr/core/structure.hpp"
#include "tsr/core/types.hpp"

namespace tsr::sp {

inline constexpr std::size_t kDefaultPathCap = 100'000;

struct PathResult {
  bool reachable = false;
  Cost cost = 0;
  std::vector<std::size_t> arcs;  // s to t order
};

// Label-setting shortest s-t path on nonnegative arc costs. Among equal
// labels the arc seen first (lowest index out of the lowest node) wins.
PathResult shortest_path(const GraphSpec& g, std::span<const Cost> cost);

// True when t is reachable from s using only arcs with allowed[a] != 0.
bool connects(const GraphSpec& g, std::span<const std::uint8_t> allowed);

// True when the arc set is exactly one simple s-t path.
bool is_simple_path(const GraphSpec& g, const BinaryVector& arcs);

// Every simple s-t path, found by depth-first search that scans arcs in
// ascending index order.
class PathCatalog {
 public:
  // Throws BudgetExceeded once more than `cap` paths exist.
  static PathCatalog build(const GraphSpec& g, std::size_t cap = kDefaultPathCap);

  std::size_t size() const { return masks_.size(); }
  const std::vector<std::vector<std::size_t>>& paths() const { return paths_; }
  const std::vector<BinaryVector>& masks() const { return masks_; }

 private:
  std::vector<std::vector<std::size_t>> paths_;
  std::vector<BinaryVector> masks_;
};

// Optimal two-stage path under scenario c: shortest path on min{C_i, c_i};
// arc i goes to stage one iff min{C_i, c_i} = C_i.
TwoStagePair solve_tst_sp(const Instance& inst, const Scenario& c);

struct SpIncResult {
  BinaryVector y;
  Cost value = 0;  // C^T x + c^T y
};

// Relaxed variant: arcs of x are free, y = shortest-path arcs outside x.
SpIncResult solve_inc_relaxed(const Instance& inst, const BinaryVector& x, const Scenario& c);

// Simple variant: best catalog path containing x. Throws InfeasibleError
// when no simple path contains x.
SpIncResult solve_inc_simple(const Instance& inst, const BinaryVector& x, const Scenario& c,
                             std::size_t cap = kDefaultPathCap);

class ShortestPathOracle final : public StructureOracle {
 public:
  // `inst` must outlive the oracle. The path catalog is built on first use.
  explicit ShortestPathOracle(const Instance& inst, std::size_t cap = kDefaultPathCap);

  const Instance& instance() const override { return inst_; }
  const PathCatalog& catalog() const;

  bool is_first_stage_feasible(const BinaryVector& x) const override;
  bool is_feasible_pair(const TwoStagePair& pair) const override;
  std::optional<Recourse> best_recourse(const BinaryVector& x,
                                        std::span<const Cost> c) const override;
  TwoStagePair solve_two_stage(std::span<const Cost> first,
                               std::span<const Cost> second) const override;
  // Pairs whose union is a simple s-t path, for both variants. Growing u or
  // v never raises Z_(u,v)(x), so this family contains a maximizer.
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

 private:
  const GraphSpec& graph() const { return inst_.graph(); }
  bool relaxed() const { return graph().variant == PathVariant::Relaxed; }

  const Instance& inst_;
  std::size_t cap_;
  mutable std::once_flag catalog_once_;
  mutable std::unique_ptr<PathCatalog> catalog_;
};

// Z(x) by pair enumeration.
RegretCertificate max_regret_sp(const Instance& inst, const BinaryVector& x,
                                std::uint64_t budget = kDefaultPairBudget);

struct TStRResult {
  Cost value = 0;
  BinaryVector x;
  std::uint64_t evaluated = 0;
};

// min over X' of Z(x) by enumeration. Ties keep the first x visited.
TStRResult solve_tstr_sp(const Instance& inst, std::uint64_t budget = kDefaultPairBudget);

// Reduction gadgets. Arc layouts are documented in the implementation.

// Four arcs (s,1), (s,2), (1,t), (2,t) with nodes s=0, 1, 2, t=3.
Instance gen_diamond(PathVariant variant, Cost M = 1000);

// Chain of n two-route gadgets plus a bypass arc; costs are doubled.
// Throws InputError on an odd sum or a nonpositive entry.
Instance gen_partition_tstr(std::span<const Cost> a, PathVariant variant = PathVariant::Simple);

struct RegretGadget {
  Instance instance;
  BinaryVector x;
};

// Two disjoint n-arc paths; Z(0) >= b iff a has a perfect split.
RegretGadget gen_partition_regret(std::span<const Cost> a,
                                  PathVariant variant = PathVariant::Simple);

struct Digraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
};

struct IncGadget {
  Instance instance;
  BinaryVector x;
  Scenario scenario;
};

// Doubled-node construction: Inc(x, c) = 0 iff g has a Hamiltonian path
// from v1 to vn.
IncGadget gen_hamiltonian_inc(const Digraph& g, std::size_t v1, std::size_t vn);

}  // namespace tsr::sp
