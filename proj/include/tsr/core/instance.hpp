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

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "tsr/core/types.hpp"

namespace tsr {

// Select exactly p of the n items.
struct SelectionSpec {
  std::size_t p = 1;
  friend bool operator==(const SelectionSpec&, const SelectionSpec&) = default;
};

enum class PathVariant {
  Simple,   // X = simple s-t paths
  Relaxed,  // X = arc subsets in which t is reachable from s
};

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Arc index is the ground-set index.
struct GraphSpec {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
  std::size_t s = 0;
  std::size_t t = 0;
  PathVariant variant = PathVariant::Simple;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

using StructureSpec = std::variant<SelectionSpec, GraphSpec>;

// Immutable problem data: first-stage costs C, the interval box U and the
// combinatorial structure. The constructor enforces every invariant and
// throws InputError otherwise.
class Instance {
 public:
  Instance(std::vector<Cost> first_stage, const UncertaintySet& uncertainty,
           StructureSpec structure);

  std::size_t size() const { return first_stage_.size(); }

  std::span<const Cost> first_stage() const { return first_stage_; }
  std::span<const Cost> lower() const { return lo_; }
  std::span<const Cost> upper() const { return hi_; }
  Interval interval(std::size_t i) const { return {lo_[i], hi_[i]}; }
  UncertaintySet uncertainty() const;

  Scenario lower_scenario() const { return {lo_}; }
  Scenario upper_scenario() const { return {hi_}; }

  const StructureSpec& structure() const { return structure_; }
  bool is_selection() const { return std::holds_alternative<SelectionSpec>(structure_); }
  bool is_graph() const { return std::holds_alternative<GraphSpec>(structure_); }
  // Throws InputError when the structure kind does not match.
  const SelectionSpec& selection() const;
  const GraphSpec& graph() const;

  // Throws InputError unless c lies in U.
  void check_scenario(const Scenario& c) const;
  void check_length(const BinaryVector& v, const char* what) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Cost> first_stage_;
  std::vector<Cost> lo_;
  std::vector<Cost> hi_;
  StructureSpec structure_;
};

// Convenience for tests and generators.
Instance make_selection_instance(std::vector<Cost> first_stage, std::vector<Cost> lo,
                                 std::vector<Cost> hi, std::size_t p);

}  // namespace tsr
