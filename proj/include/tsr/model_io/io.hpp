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


// Instance and certificate files (JSON) and the adversarial model.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "tsr/core/instance.hpp"
#include "tsr/core/types.hpp"
#include "tsr/model_io/mip_model.hpp"

namespace tsr::io {

// Instance file fields:
//   kind              "selection" or "shortest_path"
//   n                 number of ground elements
//   p                 selection only
//   graph             shortest_path only: {nodes, arcs: [[tail, head], ...],
//                     s, t, variant: "simple" | "relaxed"}
//   first_stage_cost  n integers >= 0
//   interval_lo       n integers >= 0
//   interval_hi       n integers >= interval_lo
// Throws InputError with the offending field path.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);
Instance load_instance(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, std::string_view text);

// Certificate fields: value, x, witness {u, v}, scenario_bits (bit i = 1
// when c_i = hi_i), scenario, recourse. Bit strings use '0'/'1'.
std::string write_certificate(const Instance& inst, const RegretCertificate& cert);
RegretCertificate parse_certificate(const Instance& inst, std::string_view text);

// max C^T x - C^T u - lo^T v + z over (u, v) in Z with one row
// z <= sum_i (lo_i v_i + hi_i (1 - v_i)) y_i per supplied recourse y.
// Selection instances only. Without rows the model is unbounded, which is
// recorded in the notes.
MIPModel build_adversarial_mip(const Instance& inst, const BinaryVector& x,
                               std::span<const BinaryVector> ys);

inline constexpr std::string_view kUnboundedNote = "unbounded: no y rows, z has no upper bound";

}  // namespace tsr::io
