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

#include "tsr/selection/formulations.hpp"

namespace tsr::selection {
namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

io::MIPModel build_compact_mip(const Instance& inst) {
  const std::size_t n = inst.size();
  const Cost p = static_cast<Cost>(inst.selection().p);
  const auto first = inst.first_stage();
  const auto lo = inst.lower();
  const auto hi = inst.upper();
  const auto alphas = alpha_set(inst).values;

  io::MIPModel model;
  model.name = "two-stage minmax regret selection, compact formulation";
  model.sense = io::ObjectiveSense::Minimize;
  std::vector<std::size_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = model.add_binary("x_" + idx(i));
  const std::size_t z = model.add_continuous("z", std::nullopt, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) model.objective.push_back({x[i], first[i]});
  model.objective.push_back({z, 1});

  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const Cost alpha = alphas[k];
    const std::string a = "_a" + idx(k);
    const std::size_t pi = model.add_continuous("pi" + a, std::nullopt, std::nullopt);
    std::vector<std::size_t> rho(n);
    for (std::size_t i = 0; i < n; ++i) rho[i] = model.add_continuous("rho_" + idx(i) + a);

    std::vector<io::Term> cut{{z, 1}};
    Cost rhs = p * alpha;
    for (std::size_t i = 0; i < n; ++i) {
      cut.push_back({x[i], alpha - positive_part(alpha, hi[i])});
      rhs -= positive_part(alpha, hi[i]);
    }
    cut.push_back({pi, p});
    for (std::size_t i = 0; i < n; ++i) cut.push_back({rho[i], -1});
    model.add_row("cut" + a, std::move(cut), io::RowSense::GreaterEqual, rhs);

    for (std::size_t i = 0; i < n; ++i) {
      model.add_row("first_" + idx(i) + a, {{pi, 1}, {rho[i], -1}}, io::RowSense::LessEqual,
                    first[i]);
      const Cost shift = positive_part(alpha, lo[i]) - positive_part(alpha, hi[i]);
      model.add_row("second_" + idx(i) + a, {{pi, 1}, {rho[i], -1}, {x[i], shift}},
                    io::RowSense::LessEqual, lo[i] + shift);
    }
  }

  std::vector<io::Term> card;
  for (std::size_t i = 0; i < n; ++i) card.push_back({x[i], 1});
  model.add_row("card", std::move(card), io::RowSense::LessEqual, p);

  model.notes.push_back("alpha set size " + std::to_string(alphas.size()) + ", " +
                        std::to_string(model.count(io::VarKind::Binary)) + " binaries, " +
                        std::to_string(model.count(io::VarKind::Continuous)) +
                        " continuous, " + std::to_string(model.rows.size()) + " rows");
  return model;
}

io::MIPModel build_regret_eval_mip(const Instance& inst, const BinaryVector& x) {
  const std::size_t n = inst.size();
  const std::size_t p = inst.selection().p;
  inst.check_length(x, "x");
  if (x.count() > p) throw InfeasibleError("x selects more than p items");
  const auto first = inst.first_stage();
  const auto lo = inst.lower();
  const auto hi = inst.upper();

  io::MIPModel model;
  model.name = "maximum regret of x = " + x.to_string();
  model.sense = io::ObjectiveSense::Maximize;
  std::vector<std::size_t> u(n);
  std::vector<std::size_t> v(n);
  std::vector<std::size_t> beta(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = model.add_binary("u_" + idx(i));
  for (std::size_t i = 0; i < n; ++i) v[i] = model.add_binary("v_" + idx(i));
  const std::size_t alpha = model.add_continuous("alpha");
  for (std::size_t i = 0; i < n; ++i) beta[i] = model.add_continuous("beta_" + idx(i));

  for (std::size_t i = 0; i < n; ++i) model.objective.push_back({u[i], -first[i]});
  for (std::size_t i = 0; i < n; ++i) model.objective.push_back({v[i], -lo[i]});
  model.objective.push_back({alpha, static_cast<Cost>(p - x.count())});
  for (std::size_t i = 0; i < n; ++i) model.objective.push_back({beta[i], x[i] ? 0 : -1});
  model.objective_constant = dot(first, x);

  for (std::size_t i = 0; i < n; ++i) {
    model.add_row("dual_" + idx(i), {{alpha, 1}, {beta[i], -1}, {v[i], hi[i] - lo[i]}},
                  io::RowSense::LessEqual, hi[i]);
  }
  std::vector<io::Term> card;
  for (std::size_t i = 0; i < n; ++i) {
    card.push_back({u[i], 1});
    card.push_back({v[i], 1});
  }
  model.add_row("card", std::move(card), io::RowSense::Equal, static_cast<Cost>(p));
  for (std::size_t i = 0; i < n; ++i) {
    model.add_row("pair_" + idx(i), {{u[i], 1}, {v[i], 1}}, io::RowSense::LessEqual, 1);
  }
  return model;
}

io::MIPModel build_p_pi_mip(const Instance& inst, const PiProfile& profile) {
  const std::size_t n = inst.size();
  const CoeffTable table = coefficients(inst, profile);

  io::MIPModel model;
  model.name = "P(pi) for ck = " + std::to_string(profile.ck) +
               ", cl = " + std::to_string(profile.cl);
  model.sense = io::ObjectiveSense::Minimize;
  std::vector<std::size_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = model.add_binary("x_" + idx(i));
  const std::size_t z = model.add_continuous("z", std::nullopt, std::nullopt);
  model.objective.push_back({z, 1});

  for (std::size_t k = 0; k < table.alpha_count(); ++k) {
    std::vector<io::Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({x[i], table.omega[k][i]});
    terms.push_back({z, -1});
    model.add_row("zrow_a" + idx(k), std::move(terms), io::RowSense::LessEqual, -table.nu[k]);
  }
  std::vector<io::Term> card;
  for (std::size_t i = 0; i < n; ++i) card.push_back({x[i], 1});
  model.add_row("card", std::move(card), io::RowSense::LessEqual,
                static_cast<Cost>(inst.selection().p));
  return model;
}

}  // namespace tsr::selection
