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


// Shared fixtures for the test binaries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tsr/core/instance.hpp"
#include "tsr/core/types.hpp"

namespace tsr::testing {

inline Instance small_selection() {
  return make_selection_instance({6, 1, 4, 12}, {9, 1, 2, 2}, {13, 4, 12, 6}, 3);
}

inline BinaryVector bits(const char* text) { return BinaryVector::parse(text); }

// Selection instance with n items, all values in [0, max_cost] and p
// uniform in [1, n] unless given.
inline Instance random_selection(std::mt19937_64& rng, std::size_t n, Cost max_cost = 20,
                                 std::size_t fixed_p = 0) {
  std::uniform_int_distribution<Cost> value(0, max_cost);
  std::uniform_int_distribution<std::size_t> pick_p(1, n);
  std::vector<Cost> first(n), lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = value(rng);
    Cost a = value(rng);
    Cost b = value(rng);
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  return make_selection_instance(first, lo, hi, fixed_p ? fixed_p : pick_p(rng));
}

// A uniformly random x with at most `limit` ones.
inline BinaryVector random_subset(std::mt19937_64& rng, std::size_t n, std::size_t limit) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::size_t> size(0, std::min(limit, n));
  const std::size_t k = size(rng);
  BinaryVector x(n);
  for (std::size_t j = 0; j < k; ++j) x.set(order[j]);
  return x;
}

// Random digraph instance with s = 0, t = nodes - 1 and at most max_arcs
// arcs, no self-loops. t may be unreachable.
inline Instance random_graph(std::mt19937_64& rng, std::size_t nodes, std::size_t max_arcs,
                             PathVariant variant, Cost max_cost = 20) {
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_arcs);
  std::uniform_int_distribution<Cost> value(0, max_cost);
  GraphSpec g{nodes, {}, 0, nodes - 1, variant};
  const std::size_t m = count(rng);
  std::vector<Cost> first;
  UncertaintySet box;
  // Guarantee one s-t arc chain so most graphs are connected.
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t tail = node(rng);
    std::size_t head = node(rng);
    if (k == 0) {
      tail = 0;
      head = nodes - 1;
    }
    if (tail == head) head = (head + 1) % nodes;
    g.arcs.push_back({tail, head});
    first.push_back(value(rng));
    Cost a = value(rng);
    Cost b = value(rng);
    box.intervals.push_back({std::min(a, b), std::max(a, b)});
  }
  return Instance(std::move(first), box, std::move(g));
}

}  // namespace tsr::testing
