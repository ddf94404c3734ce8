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


// MIP models for selection, ready for LP export.

#pragma once

#include "tsr/core/instance.hpp"
#include "tsr/core/types.hpp"
#include "tsr/model_io/mip_model.hpp"
#include "tsr/selection/profiles.hpp"

namespace tsr::selection {

// min C^T x + z over x, z, pi(alpha), rho_i(alpha) for alpha in the alpha
// set. Variables x_i, z, pi_a{k}, rho_i_a{k}, all indices 1-based.
io::MIPModel build_compact_mip(const Instance& inst);

// Z(x) for a fixed x as a maximization over (u, v) with dual variables
// alpha and beta_i.
io::MIPModel build_regret_eval_mip(const Instance& inst, const BinaryVector& x);

// P(pi) for one profile: one row sum_i omega_i(alpha_k) x_i - z <= -nu(alpha_k)
// per alpha, plus the cardinality row.
io::MIPModel build_p_pi_mip(const Instance& inst, const PiProfile& profile);

}  // namespace tsr::selection
