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
#include <numeric>
#include <string>

#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr::sp {
namespace {

struct Builder {
  GraphSpec graph;
  std::vector<Cost> first;
  UncertaintySet box;

  std::size_t arc(std::size_t tail, std::size_t head, Cost c, Cost lo, Cost hi) {
    graph.arcs.push_back({tail, head});
    first.push_back(c);
    box.intervals.push_back({lo, hi});
    return graph.arcs.size() - 1;
  }

  Instance finish() { return Instance(std::move(first), box, std::move(graph)); }
};

Cost half_sum(std::span<const Cost> a) {
  if (a.empty()) throw InputError("a: need at least one value");
  Cost sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw InputError("a[" + std::to_string(i) + "]: values must be positive");
    sum = checked_add(sum, a[i]);
  }
  if (sum % 2 != 0) throw InputError("a: the sum " + std::to_string(sum) + " is odd");
  return sum / 2;
}

}  // namespace

Instance gen_diamond(PathVariant variant, Cost M) {
  Builder b;
  b.graph = {4, {}, 0, 3, variant};
  b.arc(0, 1, 0, M, M);  // (s,1)
  b.arc(0, 2, 0, M, M);  // (s,2)
  b.arc(1, 3, M, 0, M);  // (1,t)
  b.arc(2, 3, M, 0, M);  // (2,t)
  return b.finish();
}

// Chain nodes v_0 = s, ..., v_n = t. Gadget i joins v_{i-1} and v_i by
// the route p_i, p'_i through node n+1+2i and the route q_i, q'_i through
// node n+2+2i. Arc r joins s and t directly. Every value is doubled so that
// 3a_i/2 stays integral.
Instance gen_partition_tstr(std::span<const Cost> a, PathVariant variant) {
  const Cost b = half_sum(a);
  const std::size_t n = a.size();
  const Cost nn = static_cast<Cost>(n);
  const Cost M = 2 * nn * b + 2 * b + 1;
  Builder g;
  g.graph = {n + 1 + 2 * n, {}, 0, n, variant};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mid_p = n + 1 + 2 * i;
    const std::size_t mid_q = n + 2 + 2 * i;
    g.arc(i, mid_p, 2 * (2 * b), 2 * M, 2 * M);   // p_i
    g.arc(mid_p, i + 1, 2 * M, 0, 3 * a[i]);      // p'_i
    g.arc(i, mid_q, 2 * (2 * b), 2 * M, 2 * M);   // q_i
    g.arc(mid_q, i + 1, 2 * M, 2 * a[i], 2 * a[i]);  // q'_i
  }
  g.arc(0, n, 2 * M, 2 * (2 * nn * b + b), 2 * M);  // r
  return g.finish();
}

// s = 0, t = 1. Path P1 uses arcs 0..n-1 through nodes 2..n, path P2 uses
// arcs n..2n-1 through nodes n+1..2n-1.
RegretGadget gen_partition_regret(std::span<const Cost> a, PathVariant variant) {
  const Cost b = half_sum(a);
  const std::size_t n = a.size();
  const Cost prohibitive = 4 * (2 * b);
  Builder g;
  g.graph = {2 * n, {}, 0, 1, variant};
  auto node = [&](std::size_t path, std::size_t k) -> std::size_t {
    if (k == 0) return 0;
    if (k == n) return 1;
    return path == 0 ? 1 + k : n + k;
  };
  for (std::size_t i = 0; i < n; ++i) g.arc(node(0, i), node(0, i + 1), a[i], 0, 2 * a[i]);
  for (std::size_t i = 0; i < n; ++i) g.arc(node(1, i), node(1, i + 1), prohibitive, a[i], a[i]);
  Instance inst = g.finish();
  BinaryVector x(inst.size());
  return {std::move(inst), std::move(x)};
}

// Nodes are ordered v1 first, vn last, the rest ascending. The node at
// position k becomes 2k (entry) and 2k+1 (exit). Arcs: forward arcs first,
// then one backward arc per input arc, then the dummy arcs.
IncGadget gen_hamiltonian_inc(const Digraph& g, std::size_t v1, std::size_t vn) {
  const std::size_t n = g.node_count;
  if (n < 2) throw InputError("graph: need at least two nodes");
  if (v1 >= n || vn >= n || v1 == vn) throw InputError("v1 and vn must be distinct nodes");
  std::vector<std::size_t> order{v1};
  for (std::size_t v = 0; v < n; ++v) {
    if (v != v1 && v != vn) order.push_back(v);
  }
  order.push_back(vn);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

  Builder b;
  b.graph = {2 * n, {}, 0, 2 * (n - 1) + 1, PathVariant::Simple};
  std::vector<std::size_t> forward;
  for (std::size_t k = 0; k < n; ++k) forward.push_back(b.arc(2 * k, 2 * k + 1, 0, 0, 0));
  for (std::size_t j = 0; j < g.arcs.size(); ++j) {
    const Arc& arc = g.arcs[j];
    if (arc.tail >= n || arc.head >= n) {
      throw InputError("graph.arcs[" + std::to_string(j) + "]: node out of range");
    }
    b.arc(2 * pos[arc.tail] + 1, 2 * pos[arc.head], 0, 0, 0);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) b.arc(2 * k + 1, 2 * k + 2, 0, 1, 1);
  Instance inst = b.finish();
  BinaryVector x = BinaryVector::from_indices(inst.size(), forward);
  Scenario c = inst.lower_scenario();
  return {std::move(inst), std::move(x), std::move(c)};
}

}  // namespace tsr::sp
