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

#include "tsr/selection/profiles.hpp"

#include <algorithm>
#include <set>

#include "tsr/kernels/kernels.hpp"

namespace tsr::selection {
namespace {

std::vector<Cost> sorted_unique(std::vector<Cost> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void append(std::vector<Cost>& out, std::span<const Cost> values) {
  out.insert(out.end(), values.begin(), values.end());
}

}  // namespace

AlphaSet alpha_set(const Instance& inst) {
  std::vector<Cost> v;
  append(v, inst.lower());
  append(v, inst.upper());
  return {sorted_unique(std::move(v))};
}

std::vector<Cost> profile_floor_candidates(const Instance& inst) {
  std::vector<Cost> v;
  append(v, inst.first_stage());
  append(v, inst.lower());
  return sorted_unique(std::move(v));
}

std::vector<Cost> profile_ceiling_candidates(const Instance& inst) {
  std::vector<Cost> v;
  append(v, inst.first_stage());
  append(v, inst.lower());
  append(v, inst.upper());
  return sorted_unique(std::move(v));
}

PiProfile make_profile(const Instance& inst, Cost ck, Cost cl) {
  if (ck > cl) throw InputError("profile: need ck <= cl");
  PiProfile profile{ck, cl, {}};
  for (Cost alpha : alpha_set(inst).values) {
    profile.pi_of.push_back(std::max(ck, std::min(alpha, cl)));
  }
  return profile;
}

std::size_t count_profile_pairs(const Instance& inst) {
  const auto floors = profile_floor_candidates(inst);
  const auto ceilings = profile_ceiling_candidates(inst);
  std::size_t count = 0;
  for (Cost ck : floors) {
    count += static_cast<std::size_t>(ceilings.end() -
                                      std::lower_bound(ceilings.begin(), ceilings.end(), ck));
  }
  return count;
}

std::vector<PiProfile> enumerate_pi_profiles(const Instance& inst) {
  std::vector<PiProfile> out;
  std::set<std::vector<Cost>> seen;
  for (Cost ck : profile_floor_candidates(inst)) {
    for (Cost cl : profile_ceiling_candidates(inst)) {
      if (ck > cl) continue;
      PiProfile profile = make_profile(inst, ck, cl);
      if (seen.insert(profile.pi_of).second) out.push_back(std::move(profile));
    }
  }
  return out;
}

Cost rank_function_r(const Instance& inst, std::size_t i, Cost alpha, bool xi) {
  const Cost lo = inst.lower()[i];
  const Cost hi = inst.upper()[i];
  const Cost shift = xi ? 0 : positive_part(alpha, lo) - positive_part(alpha, hi);
  return std::min(inst.first_stage()[i], lo + shift);
}

CoeffTable coefficients(const Instance& inst, const PiProfile& profile) {
  const std::size_t n = inst.size();
  const Cost p = static_cast<Cost>(inst.selection().p);
  const auto first = inst.first_stage();
  const auto lo = inst.lower();
  const auto hi = inst.upper();

  CoeffTable t;
  t.alphas = alpha_set(inst).values;
  if (profile.pi_of.size() != t.alphas.size()) {
    throw InputError("profile does not match the instance's alpha set");
  }
  const std::size_t m = t.alphas.size();
  t.nu.resize(m);
  t.omega.assign(m, std::vector<Cost>(n));
  t.rho_lo.assign(m, std::vector<Cost>(n));
  t.rho_hi.assign(m, std::vector<Cost>(n));
  t.omega_by_item.resize(n * m);

  for (std::size_t k = 0; k < m; ++k) {
    const Cost alpha = t.alphas[k];
    const Cost pi = profile.pi_of[k];
    Cost nu = p * alpha - p * pi;
    for (std::size_t i = 0; i < n; ++i) {
      const Cost over_hi = positive_part(alpha, hi[i]);
      const Cost over_lo = positive_part(alpha, lo[i]);
      const Cost rlo = std::max({Cost{0}, pi - first[i], pi - lo[i] - over_lo + over_hi});
      const Cost rhi = std::max({Cost{0}, pi - first[i], pi - lo[i]});
      const Cost w = first[i] - alpha + over_hi + rhi - rlo;
      nu += rlo - over_hi;
      t.rho_lo[k][i] = rlo;
      t.rho_hi[k][i] = rhi;
      t.omega[k][i] = w;
      t.omega_by_item[i * m + k] = w;
    }
    t.nu[k] = nu;
  }
  return t;
}

Cost eval_F(const CoeffTable& table, std::span<const std::size_t> items) {
  std::vector<Cost> acc = table.nu;
  for (std::size_t i : items) kernels::accumulate(acc, table.item_row(i));
  return kernels::max_value(acc);
}

Cost eval_F(const CoeffTable& table, const BinaryVector& x) {
  std::vector<Cost> acc = table.nu;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) kernels::accumulate(acc, table.item_row(i));
  }
  return kernels::max_value(acc);
}

}  // namespace tsr::selection
