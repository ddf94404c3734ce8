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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace tsr {

// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (next > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = static_cast<std::uint64_t>(next);
  }
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

// Visits every k-subset of `pool` in lexicographic order of positions.
template <typename Visit>
void for_each_combination(std::span<const std::size_t> pool, std::size_t k, Visit&& visit) {
  const std::size_t m = pool.size();
  if (k > m) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t j = 0; j < k; ++j) pos[j] = j;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) chosen[j] = pool[pos[j]];
    visit(std::span<const std::size_t>(chosen));
    std::size_t j = k;
    while (j > 0 && pos[j - 1] == m - k + (j - 1)) --j;
    if (j == 0) return;
    ++pos[j - 1];
    for (std::size_t l = j; l < k; ++l) pos[l] = pos[l - 1] + 1;
  }
}

}  // namespace tsr
