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

// Price-profile decomposition of the selection minmax-regret problem.
//
// For a fixed dual price curve pi(alpha) over the alpha set, the compact MIP
// collapses to
//
//   P(pi) = min_{|X| <= p} F(X),   F(X) = max_alpha nu(alpha) + sum_{i in X} omega_i(alpha)
//
// and the optimum over first-stage solutions is the minimum of P(pi) over
// the O(n^2) candidate curves pi(alpha) = max{ck, min{alpha, cl}}.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsr/core/instance.hpp"
#include "tsr/core/types.hpp"

namespace tsr::selection {

// Sorted, deduplicated {lo_i} U {hi_i}.
struct AlphaSet {
  std::vector<Cost> values;
};

AlphaSet alpha_set(const Instance& inst);

// {C_i} U {lo_i}, sorted and deduplicated.
std::vector<Cost> profile_floor_candidates(const Instance& inst);
// {C_i} U {lo_i} U {hi_i}, sorted and deduplicated.
std::vector<Cost> profile_ceiling_candidates(const Instance& inst);

struct PiProfile {
  Cost ck = 0;
  Cost cl = 0;
  std::vector<Cost> pi_of;  // pi_of[k] = max{ck, min{alpha_k, cl}}
};

PiProfile make_profile(const Instance& inst, Cost ck, Cost cl);

// Number of (ck, cl) pairs with ck <= cl, before merging equal curves.
std::size_t count_profile_pairs(const Instance& inst);

// All candidate curves in (ck, cl) lexicographic order. Pairs that induce
// the same curve over the alpha set are merged into the first one.
std::vector<PiProfile> enumerate_pi_profiles(const Instance& inst);

// min{C_i, lo_i + ([alpha - lo_i]_+ - [alpha - hi_i]_+)(1 - x_i)}
Cost rank_function_r(const Instance& inst, std::size_t i, Cost alpha, bool xi);

struct CoeffTable {
  std::vector<Cost> alphas;
  std::vector<Cost> nu;                   // per alpha
  std::vector<std::vector<Cost>> omega;   // [alpha][item]
  std::vector<std::vector<Cost>> rho_lo;  // [alpha][item]
  std::vector<std::vector<Cost>> rho_hi;  // [alpha][item]
  std::vector<Cost> omega_by_item;        // [item][alpha], flat

  std::size_t alpha_count() const { return alphas.size(); }
  std::size_t item_count() const { return omega.empty() ? 0 : omega.front().size(); }
  std::span<const Cost> item_row(std::size_t i) const {
    return std::span<const Cost>(omega_by_item).subspan(i * alphas.size(), alphas.size());
  }
};

CoeffTable coefficients(const Instance& inst, const PiProfile& profile);

// F(X) for X given as item indices or as a 0/1 vector.
Cost eval_F(const CoeffTable& table, std::span<const std::size_t> items);
Cost eval_F(const CoeffTable& table, const BinaryVector& x);

}  // namespace tsr::selection
