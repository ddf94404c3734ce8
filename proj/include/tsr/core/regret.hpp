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

#include <cstdint>

#include "tsr/core/instance.hpp"
#include "tsr/core/structure.hpp"
#include "tsr/core/types.hpp"

namespace tsr {

// The extreme scenario induced by v: lower bound where v_i = 1, upper bound
// elsewhere.
Scenario scenario_from_v(const Instance& inst, const BinaryVector& v);

// Inc(x, c) = C^T x + min_{y in R(x)} c^T y.
Cost incremental_cost(const StructureOracle& oracle, const BinaryVector& x, const Scenario& c);

// Opt(c) = min_{(x,y) in Z} C^T x + c^T y.
Cost two_stage_optimum(const StructureOracle& oracle, const Scenario& c);

// Z_(u,v)(x) = C^T x - C^T u - lo^T v + min_{y in R(x)} c_v^T y.
// Throws InfeasibleError when R(x) is empty.
Cost regret_of_pair(const StructureOracle& oracle, const BinaryVector& x,
                    const TwoStagePair& pair);

// Z(x) as the maximum of Z_(u,v)(x) over the structure's pair family.
// Ties keep the first pair visited.
RegretCertificate max_regret_enum(const StructureOracle& oracle, const BinaryVector& x,
                                  std::uint64_t budget = kDefaultPairBudget);

// Builds the certificate for x from a maximizing pair: worst scenario c_v,
// best recourse under it and the exact value.
RegretCertificate certificate_from_pair(const StructureOracle& oracle, const BinaryVector& x,
                                        const TwoStagePair& pair);

// First-stage part of an optimal two-stage solution under the midpoint
// scenario (lo + hi) / 2. Units are doubled internally (2C vs lo + hi).
BinaryVector midpoint_heuristic(const StructureOracle& oracle);

}  // namespace tsr
