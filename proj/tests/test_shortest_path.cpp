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

#include <limits>
#include <numeric>
#include <random>

#include "support.hpp"
#include "tsr/oracle/oracle.hpp"
#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr::sp {
namespace {

using tsr::testing::bits;

// Depth-first count of simple s-t paths, written independently of the catalog.
std::size_t count_paths(const GraphSpec& g, std::size_t at, std::vector<char>& on_path) {
  if (at == g.t) return 1;
  std::size_t total = 0;
  on_path[at] = 1;
  for (const Arc& a : g.arcs) {
    if (a.tail == at && !on_path[a.head]) total += count_paths(g, a.head, on_path);
  }
  on_path[at] = 0;
  return total;
}

Scenario random_scenario(std::mt19937_64& rng, const Instance& inst) {
  Scenario c;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    c.costs.push_back(std::uniform_int_distribution<Cost>(inst.lower()[i], inst.upper()[i])(rng));
  }
  return c;
}

TEST(Graph, ShortestPathMatchesCatalogMinimum) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = tsr::testing::random_graph(rng, 2 + rng() % 5, 10, PathVariant::Simple);
    const GraphSpec& g = inst.graph();
    const auto catalog = PathCatalog::build(g);
    std::vector<char> on_path(g.node_count, 0);
    EXPECT_EQ(catalog.size(), count_paths(g, g.s, on_path));
    const Scenario c = random_scenario(rng, inst);
    Cost best = std::numeric_limits<Cost>::max();
    for (const auto& mask : catalog.masks()) {
      EXPECT_TRUE(is_simple_path(g, mask));
      best = std::min(best, dot(c.costs, mask));
    }
    const auto r = shortest_path(g, c.costs);
    ASSERT_TRUE(r.reachable);
    EXPECT_EQ(r.cost, best);
  }
}

TEST(Graph, ConnectsAndSimplePath) {
  // s=0 -> 1 -> t=2, plus a back arc 1 -> 0.
  const GraphSpec g{3, {{0, 1}, {1, 2}, {1, 0}}, 0, 2, PathVariant::Simple};
  EXPECT_TRUE(connects(g, std::vector<std::uint8_t>{1, 1, 0}));
  EXPECT_FALSE(connects(g, std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_TRUE(is_simple_path(g, bits("110")));
  EXPECT_FALSE(is_simple_path(g, bits("111")));
  EXPECT_FALSE(is_simple_path(g, bits("100")));
  EXPECT_FALSE(shortest_path(g, std::vector<Cost>{1, 1, 1}).arcs.empty());
}

TEST(Graph, CatalogCap) {
  // Layered graph with 2^6 s-t paths.
  GraphSpec g{7, {}, 0, 6, PathVariant::Simple};
  for (std::size_t v = 0; v < 6; ++v) {
    g.arcs.push_back({v, v + 1});
    g.arcs.push_back({v, v + 1});
  }
  EXPECT_EQ(PathCatalog::build(g).size(), 64u);
  EXPECT_THROW(PathCatalog::build(g, 10), BudgetExceeded);
}

TEST(SimpleInc, MatchesEnumeration) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = tsr::testing::random_graph(rng, 2 + rng() % 5, 10, PathVariant::Simple);
    const GraphSpec& g = inst.graph();
    const std::size_t m = g.arcs.size();
    const Scenario c = random_scenario(rng, inst);
    const BinaryVector x = tsr::testing::random_subset(rng, m, 2);
    Cost best = -1;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      BinaryVector all(m);
      bool covers = true;
      for (std::size_t a = 0; a < m; ++a) {
        all.set(a, mask >> a & 1U);
        covers = covers && (!x[a] || all[a]);
      }
      if (!covers || !is_simple_path(g, all)) continue;
      Cost cost = dot(inst.first_stage(), x);
      for (std::size_t a = 0; a < m; ++a) {
        if (all[a] && !x[a]) cost += c.costs[a];
      }
      if (best < 0 || cost < best) best = cost;
    }
    if (best < 0) {
      EXPECT_THROW(solve_inc_simple(inst, x, c), InfeasibleError);
    } else {
      EXPECT_EQ(solve_inc_simple(inst, x, c).value, best);
    }
  }
}

TEST(SimpleInc, VariantChecks) {
  const Instance relaxed = gen_diamond(PathVariant::Relaxed);
  const Instance simple = gen_diamond(PathVariant::Simple);
  EXPECT_THROW(solve_inc_simple(relaxed, bits("0000"), relaxed.lower_scenario()), InputError);
  EXPECT_THROW(solve_inc_relaxed(simple, bits("0000"), simple.lower_scenario()), InputError);
}

TEST(Regret, EnumerationMatchesOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const auto variant = trial % 2 ? PathVariant::Relaxed : PathVariant::Simple;
    const Instance inst = tsr::testing::random_graph(rng, 2 + rng() % 4, 8, variant);
    const ShortestPathOracle structure(inst);
    std::vector<BinaryVector> firsts;
    structure.for_each_first_stage([&](const BinaryVector& x) { firsts.push_back(x); }, 1'000'000);
    for (std::size_t k = 0; k < std::min<std::size_t>(firsts.size(), 4); ++k) {
      const BinaryVector& x = firsts[rng() % firsts.size()];
      EXPECT_EQ(max_regret_sp(inst, x).value, oracle::brute_Z(structure, x).value);
    }
    EXPECT_EQ(solve_tstr_sp(inst).value, oracle::brute_tstr(structure).value);
  }
}

TEST(Diamond, Relaxed) {
  const Instance inst = gen_diamond(PathVariant::Relaxed);
  const ShortestPathOracle structure(inst);
  EXPECT_EQ(max_regret_sp(inst, bits("1100")).value, 0);
  EXPECT_EQ(oracle::brute_Z(structure, bits("1100")).value, 0);
  // Exits (M, 0): the recourse takes (2,t) and the total stays 0.
  const Scenario c{{1000, 1000, 1000, 0}};
  const auto inc = solve_inc_relaxed(inst, bits("1100"), c);
  EXPECT_EQ(inc.value, 0);
  EXPECT_EQ(inc.y, bits("0001"));
}

TEST(Diamond, Simple) {
  constexpr Cost M = 1000;
  const Instance inst = gen_diamond(PathVariant::Simple, M);
  const ShortestPathOracle structure(inst);
  EXPECT_EQ(oracle::brute_tstr(structure).value, M);
  structure.for_each_first_stage([&](const BinaryVector& x) {
    EXPECT_GE(oracle::brute_Z(structure, x).value, M) << x.to_string();
  }, 1000);
  for (const char* x : {"0000", "1000", "0100", "1010", "0101"}) {
    EXPECT_EQ(max_regret_sp(inst, bits(x)).value, M) << x;
  }
  // Buying only an exit arc forces the matching entry arc at M.
  EXPECT_EQ(max_regret_sp(inst, bits("0010")).value, 2 * M);
}

TEST(PartitionTstr, Thresholds) {
  // Costs are doubled, so "optimum <= 3b/2" reads "optimum <= 3b".
  const std::vector<std::vector<Cost>> yes = {{1, 1}, {2, 2}, {1, 1, 2}, {1, 2, 3}};
  const std::vector<std::vector<Cost>> no = {{1, 3}, {1, 1, 4}, {2, 4}};
  for (PathVariant v : {PathVariant::Simple, PathVariant::Relaxed}) {
    for (const auto& a : yes) {
      const Instance inst = gen_partition_tstr(a, v);
      const Cost b = std::accumulate(a.begin(), a.end(), Cost{0}) / 2;
      EXPECT_LE(oracle::brute_tstr(ShortestPathOracle(inst)).value, 3 * b);
    }
    for (const auto& a : no) {
      const Instance inst = gen_partition_tstr(a, v);
      const Cost b = std::accumulate(a.begin(), a.end(), Cost{0}) / 2;
      EXPECT_GT(oracle::brute_tstr(ShortestPathOracle(inst)).value, 3 * b);
    }
  }
}

TEST(PartitionTstr, QuantitiesOfTheConstruction) {
  const std::vector<Cost> a = {1, 3};
  const Cost n = 2, b = 2;
  const Instance inst = gen_partition_tstr(a);
  EXPECT_EQ(inst.size(), 4 * a.size() + 1);
  const ShortestPathOracle structure(inst);
  // Doubled: Opt(lo) = 2 * 2nb, and all-q has regret 2 * 2b.
  EXPECT_EQ(oracle::brute_opt(structure, inst.lower_scenario()), 2 * 2 * n * b);
  EXPECT_EQ(max_regret_sp(inst, bits("001000100")).value, 2 * 2 * b);
}

TEST(PartitionTstr, RejectsBadInput) {
  EXPECT_THROW(gen_partition_tstr(std::vector<Cost>{1, 2}), InputError);
  EXPECT_THROW(gen_partition_tstr(std::vector<Cost>{0, 2}), InputError);
  EXPECT_THROW(gen_partition_tstr(std::vector<Cost>{}), InputError);
  EXPECT_THROW(gen_partition_regret(std::vector<Cost>{1, 2}), InputError);
}

TEST(PartitionRegret, ExactValue) {
  // Z(0) = min{sum outside I, sum} maximized over I: b when a splits evenly.
  for (PathVariant v : {PathVariant::Simple, PathVariant::Relaxed}) {
    const auto g = gen_partition_regret(std::vector<Cost>{1, 1}, v);
    EXPECT_EQ(g.x, bits("0000"));
    EXPECT_EQ(oracle::brute_Z(ShortestPathOracle(g.instance), g.x).value, 1);
    const auto h = gen_partition_regret(std::vector<Cost>{1, 3}, v);
    EXPECT_LT(oracle::brute_Z(ShortestPathOracle(h.instance), h.x).value, 2);
  }
}

TEST(Hamiltonian, GadgetShape) {
  // Path 0 -> 1 -> 2 plus a chord 0 -> 2.
  const Digraph g{3, {{0, 1}, {1, 2}, {0, 2}}};
  const auto gadget = gen_hamiltonian_inc(g, 0, 2);
  const Instance& inst = gadget.instance;
  EXPECT_EQ(inst.graph().node_count, 6u);
  EXPECT_EQ(gadget.x.count(), 3u);  // one forward arc per node
  EXPECT_EQ(solve_inc_simple(inst, gadget.x, gadget.scenario).value, 0);

  const Digraph broken{3, {{0, 2}, {2, 1}}};
  const auto miss = gen_hamiltonian_inc(broken, 0, 2);
  Cost inc = -1;
  try {
    inc = solve_inc_simple(miss.instance, miss.x, miss.scenario).value;
  } catch (const InfeasibleError&) {
  }
  EXPECT_NE(inc, 0);
  EXPECT_THROW(gen_hamiltonian_inc(g, 0, 0), InputError);
  EXPECT_THROW(gen_hamiltonian_inc(g, 0, 5), InputError);
}

}  // namespace
}  // namespace tsr::sp
