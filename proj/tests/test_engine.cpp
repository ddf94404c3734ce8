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


#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "tsr/core/regret.hpp"
#include "tsr/engine/engine.hpp"
#include "tsr/oracle/oracle.hpp"
#include "tsr/selection/selection.hpp"
#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr::engine {
namespace {

// 0-1 knapsack-style minimization: min -value.x s.t. weight.x <= cap.
BnbProblem knapsack(const std::vector<Cost>& value, const std::vector<Cost>& weight, Cost cap) {
  BnbProblem p;
  p.n = value.size();
  p.objective = [=](const BinaryVector& x) -> std::optional<Cost> {
    if (dot(weight, x) > cap) return std::nullopt;
    return -dot(value, x);
  };
  p.can_extend = [=](const BinaryVector& prefix, std::size_t) { return dot(weight, prefix) <= cap; };
  p.lower_bound = [=](const BinaryVector& prefix, std::size_t depth) {
    Cost bound = -dot(value, prefix);
    for (std::size_t i = depth; i < value.size(); ++i) bound -= value[i];
    return bound;
  };
  return p;
}

TEST(Bnb, MatchesEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<Cost> value(n), weight(n);
    for (auto& v : value) v = static_cast<Cost>(rng() % 20);
    for (auto& w : weight) w = static_cast<Cost>(rng() % 20);
    const Cost cap = static_cast<Cost>(rng() % 50);
    Cost best = 0;
    BinaryVector first_best(n);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      Cost v = 0, w = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) {
          v += value[i];
          w += weight[i];
        }
      }
      if (w <= cap && -v < best) best = -v;
    }
    const auto r = bnb_minimize(knapsack(value, weight, cap));
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.value, best);
  }
}

TEST(Bnb, TieKeepsFirstInSearchOrder) {
  BnbProblem p;
  p.n = 3;
  p.objective = [](const BinaryVector& x) -> std::optional<Cost> {
    return x.count() == 1 ? std::optional<Cost>(5) : std::nullopt;
  };
  // Depth first with the 0-branch first reaches 001 before 010 and 100.
  EXPECT_EQ(bnb_minimize(p).x.to_string(), "001");
}

TEST(Bnb, CutoffAndBudget) {
  const auto p = knapsack({3, 4, 5}, {1, 1, 1}, 2);
  BnbOptions opt;
  opt.cutoff = -9;
  EXPECT_FALSE(bnb_minimize(p, opt).found);
  opt.cutoff = -8;
  EXPECT_TRUE(bnb_minimize(p, opt).found);
  BnbOptions tiny;
  tiny.node_budget = 2;
  EXPECT_THROW(bnb_minimize(p, tiny), BudgetExceeded);

  BnbProblem none;
  none.n = 2;
  none.objective = [](const BinaryVector&) -> std::optional<Cost> { return std::nullopt; };
  EXPECT_FALSE(bnb_minimize(none).found);
}

TEST(CutPool, Deduplicates) {
  CutPool pool;
  const TwoStagePair a{BinaryVector::parse("10"), BinaryVector::parse("01")};
  const TwoStagePair b{BinaryVector::parse("01"), BinaryVector::parse("10")};
  EXPECT_TRUE(pool.empty());
  EXPECT_TRUE(pool.add(a));
  EXPECT_FALSE(pool.add(a));
  EXPECT_TRUE(pool.add(b));
  EXPECT_EQ(pool.size(), 2u);
  EXPECT_TRUE(pool.contains(b));
}

TEST(ColGen, SmallSelectionWithTrace) {
  const Instance inst = tsr::testing::small_selection();
  const selection::SelectionOracle structure(inst);
  std::ostringstream trace;
  ColGenOptions opt;
  opt.trace = &trace;
  const auto r = solve_colgen(structure, opt);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.state.lower_bound, r.state.upper_bound);
  EXPECT_EQ(r.pool.size(), r.state.iterations);
  // One tab-separated line per iteration; bounds close monotonically.
  std::istringstream lines(trace.str());
  std::string line;
  std::size_t count = 0;
  Cost last_lb = -1;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::size_t it, pool;
    Cost lb, ub;
    ASSERT_TRUE(fields >> it >> lb >> ub >> pool) << line;
    EXPECT_EQ(it, ++count);
    EXPECT_GE(lb, last_lb);
    EXPECT_LE(lb, ub);
    last_lb = lb;
  }
  EXPECT_EQ(count, r.state.iterations);
}

TEST(ColGen, MatchesOracleOnGraphs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto variant = trial % 2 ? PathVariant::Relaxed : PathVariant::Simple;
    const Instance inst = tsr::testing::random_graph(rng, 2 + rng() % 4, 8, variant);
    const sp::ShortestPathOracle structure(inst);
    EXPECT_EQ(solve_colgen(structure).value, oracle::brute_tstr(structure).value);
  }
}

TEST(ColGen, IterationCap) {
  std::mt19937_64 rng(43);
  const Instance inst = tsr::testing::random_selection(rng, 8, 20, 4);
  const selection::SelectionOracle structure(inst);
  const auto full = solve_colgen(structure);
  if (full.state.iterations > 1) {
    ColGenOptions capped;
    capped.iteration_cap = 1;
    EXPECT_THROW(solve_colgen(structure, capped), BudgetExceeded);
  }
}

TEST(Master, PoolValueIsLowerBound) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = tsr::testing::random_selection(rng, 1 + rng() % 6);
    const selection::SelectionOracle structure(inst);
    CutPool pool;
    structure.for_each_pair([&](const TwoStagePair& pr) {
      if (rng() % 4 == 0) pool.add(pr);
    }, 1'000'000);
    if (pool.empty()) continue;
    const auto m = master_solve(structure, pool);
    // The master value is the pool maximum at its x, and never above Z.
    Cost at_x = std::numeric_limits<Cost>::min();
    for (const auto& pr : pool.pairs()) at_x = std::max(at_x, regret_of_pair(structure, m.x, pr));
    EXPECT_EQ(m.value, at_x);
    EXPECT_LE(m.value, oracle::brute_tstr(structure).value);
    const auto sep = separate(structure, m.x);
    EXPECT_EQ(sep.value, selection::max_regret(inst, m.x).value);
  }
}

}  // namespace
}  // namespace tsr::engine
