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

#include "tsr/kernels/kernels.hpp"

namespace tsr::kernels::scalar {

Cost recourse_costs(Cost alpha, std::span<const Cost> lo, std::span<const Cost> hi,
                    std::span<const Cost> first, std::span<const std::uint8_t> in_x,
                    std::span<Cost> out) {
  Cost excess = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Cost hat = in_x[i] ? lo[i] : std::max(lo[i], std::min(alpha, hi[i]));
    out[i] = std::min(first[i], hat);
    if (!in_x[i]) excess += positive_part(alpha, hi[i]);
  }
  return excess;
}

void accumulate(std::span<Cost> acc, std::span<const Cost> row) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += row[k];
}

Cost max_value(std::span<const Cost> values) {
  Cost best = values[0];
  for (std::size_t k = 1; k < values.size(); ++k) best = std::max(best, values[k]);
  return best;
}

}  // namespace tsr::kernels::scalar
