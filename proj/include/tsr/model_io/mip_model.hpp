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


// A small symbolic MIP model and its CPLEX-LP writer.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tsr/core/types.hpp"

namespace tsr::io {

enum class VarKind { Continuous, Binary };
enum class RowSense { LessEqual, GreaterEqual, Equal };
enum class ObjectiveSense { Minimize, Maximize };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  std::optional<Cost> lower = Cost{0};  // nullopt means -inf
  std::optional<Cost> upper;            // nullopt means +inf
};

struct Term {
  std::size_t var = 0;
  Cost coef = 0;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  RowSense sense = RowSense::LessEqual;
  Cost rhs = 0;
};

class MIPModel {
 public:
  std::string name;
  ObjectiveSense sense = ObjectiveSense::Minimize;
  std::vector<Term> objective;
  Cost objective_constant = 0;
  std::vector<Variable> variables;
  std::vector<Row> rows;
  // Free-form remarks written as comments at the top of the LP file.
  std::vector<std::string> notes;

  std::size_t add_binary(std::string var_name);
  std::size_t add_continuous(std::string var_name, std::optional<Cost> lower = Cost{0},
                             std::optional<Cost> upper = std::nullopt);
  void add_row(std::string row_name, std::vector<Term> terms, RowSense row_sense, Cost rhs);

  // Index of the named variable; throws InputError if absent.
  std::size_t index_of(const std::string& var_name) const;
  std::size_t count(VarKind kind) const;

  // Throws InputError on a dangling variable index or a duplicate name.
  void validate() const;
};

// Deterministic CPLEX-LP text. Terms keep their insertion order, zero
// coefficients included. A model without rows omits the Subject To block.
std::string export_lp(const MIPModel& model);

}  // namespace tsr::io
