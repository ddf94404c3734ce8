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


#include <string>
#include <vector>

#include "tsr/model_io/io.hpp"

namespace tsr::io {

MIPModel build_adversarial_mip(const Instance& inst, const BinaryVector& x,
                               std::span<const BinaryVector> ys) {
  if (!inst.is_selection()) {
    throw InputError("the adversarial model is available for selection instances only");
  }
  const std::size_t n = inst.size();
  const std::size_t p = inst.selection().p;
  inst.check_length(x, "x");
  if (x.count() > p) throw InfeasibleError("x selects more than p items");
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const BinaryVector& y = ys[k];
    inst.check_length(y, "y");
    bool overlap = false;
    for (std::size_t i = 0; i < n; ++i) overlap = overlap || (x[i] && y[i]);
    if (overlap || x.count() + y.count() != p) {
      throw InputError("y row " + std::to_string(k + 1) + " is not a recourse action for x");
    }
  }
  const auto first = inst.first_stage();
  const auto lo = inst.lower();
  const auto hi = inst.upper();

  MIPModel model;
  model.name = "adversarial problem for x = " + x.to_string();
  model.sense = ObjectiveSense::Maximize;
  std::vector<std::size_t> u(n);
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = model.add_binary("u_" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) v[i] = model.add_binary("v_" + std::to_string(i + 1));
  const std::size_t z = model.add_continuous("z", std::nullopt, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) model.objective.push_back({u[i], -first[i]});
  for (std::size_t i = 0; i < n; ++i) model.objective.push_back({v[i], -lo[i]});
  model.objective.push_back({z, 1});
  model.objective_constant = dot(first, x);

  for (std::size_t k = 0; k < ys.size(); ++k) {
    std::vector<Term> terms{{z, 1}};
    Cost rhs = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ys[k][i]) continue;
      terms.push_back({v[i], hi[i] - lo[i]});
      rhs += hi[i];
    }
    model.add_row("y" + std::to_string(k + 1), std::move(terms), RowSense::LessEqual, rhs);
  }
  std::vector<Term> card;
  for (std::size_t i = 0; i < n; ++i) {
    card.push_back({u[i], 1});
    card.push_back({v[i], 1});
  }
  model.add_row("card", std::move(card), RowSense::Equal, static_cast<Cost>(p));
  for (std::size_t i = 0; i < n; ++i) {
    model.add_row("pair_" + std::to_string(i + 1), {{u[i], 1}, {v[i], 1}}, RowSense::LessEqual, 1);
  }
  if (ys.empty()) model.notes.emplace_back(kUnboundedNote);
  return model;
}

}  // namespace tsr::io
