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


// Brute-force reference implementations. They either enumerate completely
// or refuse with BudgetExceeded; nothing here samples.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tsr/core/instance.hpp"
#include "tsr/core/structure.hpp"
#include "tsr/core/types.hpp"

namespace tsr::oracle {

inline constexpr std::size_t kDefaultMaxN = 16;

struct OptResult {
  Cost value = 0;
  TwoStagePair pair;
};

// Opt(c) by enumerating the structure's pair family.
OptResult brute_opt_pair(const StructureOracle& structure, const Scenario& c,
                         std::uint64_t budget = kDefaultPairBudget);
Cost brute_opt(const StructureOracle& structure, const Scenario& c,
               std::uint64_t budget = kDefaultPairBudget);

// Z(x) as the maximum of Inc(x, c) - Opt(c) over all 2^n extreme
// scenarios. Inc is taken over the enumerated recourse family. Ties keep
// the lexicographically smallest scenario bit pattern (bit i = 1 means
// c_i = hi_i). The witness is an optimal pair under the worst scenario.
RegretCertificate brute_Z(const StructureOracle& structure, const BinaryVector& x,
                          std::size_t max_n = kDefaultMaxN,
                          std::uint64_t budget = kDefaultPairBudget);

struct TStRBrute {
  Cost value = 0;
  BinaryVector x;
};

// min over X' of brute_Z(x); ties keep the first x visited.
TStRBrute brute_tstr(const StructureOracle& structure, std::size_t max_n = kDefaultMaxN,
                     std::uint64_t budget = kDefaultPairBudget);

struct MidpointGap {
  Instance instance;
  BinaryVector midpoint_x;
  Cost midpoint_regret = 0;
  BinaryVector optimal_x;
  Cost optimum = 0;
  std::uint64_t trials = 0;
};

// Seeded search over two-item selection instances (p = 1) for one where
// the midpoint solution's regret exceeds `ratio` times a positive optimum.
// Every candidate is scored with brute_Z and brute_tstr.
std::optional<MidpointGap> search_midpoint_gap(Cost ratio, std::uint64_t seed,
                                               std::uint64_t max_trials = 1'000'000);

}  // namespace tsr::oracle
