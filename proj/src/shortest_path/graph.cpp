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
#include <queue>
#include <string>
#include <utility>

#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr::sp {
namespace {

std::vector<std::vector<std::size_t>> out_arcs(const GraphSpec& g) {
  std::vector<std::vector<std::size_t>> out(g.node_count);
  for (std::size_t a = 0; a < g.arcs.size(); ++a) out[g.arcs[a].tail].push_back(a);
  return out;
}

}  // namespace

PathResult shortest_path(const GraphSpec& g, std::span<const Cost> cost) {
  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  const auto out = out_arcs(g);
  std::vector<Cost> dist(g.node_count, kInf);
  std::vector<std::size_t> pred(g.node_count, g.arcs.size());
  std::vector<bool> done(g.node_count, false);
  using Label = std::pair<Cost, std::size_t>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  dist[g.s] = 0;
  queue.push({0, g.s});
  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (done[node]) continue;
    done[node] = true;
    for (std::size_t a : out[node]) {
      const std::size_t head = g.arcs[a].head;
      const Cost nd = d + cost[a];
      if (!done[head] && nd < dist[head]) {
        dist[head] = nd;
        pred[head] = a;
        queue.push({nd, head});
      }
    }
  }
  PathResult result;
  if (dist[g.t] == kInf) return result;
  result.reachable = true;
  result.cost = dist[g.t];
  for (std::size_t node = g.t; node != g.s;) {
    const std::size_t a = pred[node];
    result.arcs.push_back(a);
    node = g.arcs[a].tail;
  }
  std::reverse(result.arcs.begin(), result.arcs.end());
  return result;
}

bool connects(const GraphSpec& g, std::span<const std::uint8_t> allowed) {
  const auto out = out_arcs(g);
  std::vector<bool> seen(g.node_count, false);
  std::vector<std::size_t> stack{g.s};
  seen[g.s] = true;
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    if (node == g.t) return true;
    for (std::size_t a : out[node]) {
      const std::size_t head = g.arcs[a].head;
      if (allowed[a] && !seen[head]) {
        seen[head] = true;
        stack.push_back(head);
      }
    }
  }
  return false;
}

bool is_simple_path(const GraphSpec& g, const BinaryVector& arcs) {
  std::vector<std::size_t> next(g.node_count, g.arcs.size());
  std::vector<int> indegree(g.node_count, 0);
  std::size_t total = 0;
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    if (!arcs[a]) continue;
    ++total;
    const Arc& arc = g.arcs[a];
    if (next[arc.tail] != g.arcs.size()) return false;
    next[arc.tail] = a;
    if (++indegree[arc.head] > 1) return false;
  }
  if (total == 0 || indegree[g.s] != 0 || next[g.t] != g.arcs.size()) return false;
  std::size_t walked = 0;
  std::size_t node = g.s;
  while (node != g.t) {
    const std::size_t a = next[node];
    if (a == g.arcs.size() || ++walked > total) return false;
    node = g.arcs[a].head;
  }
  return walked == total;
}

PathCatalog PathCatalog::build(const GraphSpec& g, std::size_t cap) {
  PathCatalog catalog;
  const auto out = out_arcs(g);
  std::vector<bool> on_path(g.node_count, false);
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> extend = [&](std::size_t node) {
    on_path[node] = true;
    for (std::size_t a : out[node]) {
      const std::size_t head = g.arcs[a].head;
      if (on_path[head]) continue;
      stack.push_back(a);
      if (head == g.t) {
        if (catalog.paths_.size() >= cap) {
          throw BudgetExceeded("more than " + std::to_string(cap) + " simple s-t paths");
        }
        catalog.paths_.push_back(stack);
        catalog.masks_.push_back(BinaryVector::from_indices(g.arcs.size(), stack));
      } else {
        extend(head);
      }
      stack.pop_back();
    }
    on_path[node] = false;
  };
  extend(g.s);
  return catalog;
}

}  // namespace tsr::sp
