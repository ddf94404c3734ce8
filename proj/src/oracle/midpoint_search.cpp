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
#include <array>
#include <random>

#include "tsr/core/regret.hpp"
#include "tsr/oracle/oracle.hpp"
#include "tsr/selection/selection.hpp"

namespace tsr::oracle {
namespace {

// Values spread over four orders of magnitude, with near neighbours so
// that "slightly cheaper now" situations can occur.
constexpr std::array<Cost, 16> kPalette{0,   1,   2,    5,    10,   99,    100,   999,
                                        1000, 1001, 2000, 5000, 9999, 10000, 20000, 40000};

}  // namespace

std::optional<MidpointGap> search_midpoint_gap(Cost ratio, std::uint64_t seed,
                                               std::uint64_t max_trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, kPalette.size() - 1);
  for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
    std::vector<Cost> first(2);
    std::vector<Cost> lo(2);
    std::vector<Cost> hi(2);
    for (std::size_t i = 0; i < 2; ++i) {
      first[i] = kPalette[pick(rng)];
      const Cost a = kPalette[pick(rng)];
      const Cost b = kPalette[pick(rng)];
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }
    Instance inst = make_selection_instance(first, lo, hi, 1);
    selection::SelectionOracle structure(inst);
    const TStRBrute best = brute_tstr(structure);
    if (best.value <= 0) continue;
    const BinaryVector mid = midpoint_heuristic(structure);
    const Cost z = brute_Z(structure, mid).value;
    if (z > ratio * best.value) {
      return MidpointGap{std::move(inst), mid, z, best.x, best.value, trial};
    }
  }
  return std::nullopt;
}

}  // namespace tsr::oracle
