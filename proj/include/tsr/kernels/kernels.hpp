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

// Data-parallel inner loops. Each kernel has a scalar reference and, where
// the CPU supports it, an AVX2 variant; the dispatcher picks one at startup.
// The scalar versions define the semantics and every vector variant must
// agree with them bit for bit.
//
// Set TSR_ISA=scalar in the environment to force the reference path.

#pragma once

#include <cstdint>
#include <span>

#include "tsr/core/types.hpp"

namespace tsr::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
// Throws Error if the ISA is not available on this machine.
void set_isa(Isa isa);

// For every i:
//   out[i] = min(first[i], in_x[i] ? lo[i] : clamp(alpha, lo[i], hi[i]))
// and returns sum over {i : !in_x[i]} of [alpha - hi[i]]_+.
//
// clamp(alpha, lo, hi) equals lo + [alpha - lo]_+ - [alpha - hi]_+ when
// lo <= hi, which is the modified second-stage cost of the selection
// max-regret subproblem.
Cost recourse_costs(Cost alpha, std::span<const Cost> lo, std::span<const Cost> hi,
                    std::span<const Cost> first, std::span<const std::uint8_t> in_x,
                    std::span<Cost> out);

// acc[k] += row[k]
void accumulate(std::span<Cost> acc, std::span<const Cost> row);

// max_k values[k]; values must be nonempty.
Cost max_value(std::span<const Cost> values);

namespace scalar {
Cost recourse_costs(Cost alpha, std::span<const Cost> lo, std::span<const Cost> hi,
                    std::span<const Cost> first, std::span<const std::uint8_t> in_x,
                    std::span<Cost> out);
void accumulate(std::span<Cost> acc, std::span<const Cost> row);
Cost max_value(std::span<const Cost> values);
}  // namespace scalar

#if defined(TSR_HAVE_AVX2)
namespace avx2 {
Cost recourse_costs(Cost alpha, std::span<const Cost> lo, std::span<const Cost> hi,
                    std::span<const Cost> first, std::span<const std::uint8_t> in_x,
                    std::span<Cost> out);
void accumulate(std::span<Cost> acc, std::span<const Cost> row);
Cost max_value(std::span<const Cost> values);
}  // namespace avx2
#endif

}  // namespace tsr::kernels
