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

#include "tsr/core/instance.hpp"

#include <string>

namespace tsr {
namespace {

void check_cost(Cost c, const std::string& field, std::size_t i) {
  if (c < 0 || c > kMaxCost) {
    throw InputError(field + "[" + std::to_string(i) + "]: cost " + std::to_string(c) +
                     " outside [0, 2^40]");
  }
}

void validate_graph(const GraphSpec& g, std::size_t n) {
  if (g.arcs.size() != n) {
    throw InputError("graph.arcs: " + std::to_string(g.arcs.size()) +
                     " arcs but n = " + std::to_string(n));
  }
  if (g.node_count < 2) throw InputError("graph.nodes: need at least two nodes");
  if (g.s >= g.node_count) throw InputError("graph.s: node out of range");
  if (g.t >= g.node_count) throw InputError("graph.t: node out of range");
  if (g.s == g.t) throw InputError("graph: s and t must differ");
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& a = g.arcs[i];
    const std::string where = "graph.arcs[" + std::to_string(i) + "]";
    if (a.tail >= g.node_count || a.head >= g.node_count) {
      throw InputError(where + ": node out of range");
    }
    if (a.tail == a.head) throw InputError(where + ": self-loop");
  }
}

}  // namespace

Instance::Instance(std::vector<Cost> first_stage, const UncertaintySet& uncertainty,
                   StructureSpec structure)
    : first_stage_(std::move(first_stage)), structure_(std::move(structure)) {
  const std::size_t n = first_stage_.size();
  if (n == 0) throw InputError("n: instance must have at least one element");
  if (n > kMaxElements) throw InputError("n: too many elements");
  if (uncertainty.intervals.size() != n) {
    throw InputError("interval_lo/interval_hi: length " +
                     std::to_string(uncertainty.intervals.size()) + " != n = " +
                     std::to_string(n));
  }
  lo_.reserve(n);
  hi_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    check_cost(first_stage_[i], "first_stage_cost", i);
    const Interval& iv = uncertainty.intervals[i];
    check_cost(iv.lo, "interval_lo", i);
    check_cost(iv.hi, "interval_hi", i);
    if (iv.lo > iv.hi) {
      throw InputError("interval_hi[" + std::to_string(i) + "]: lo " + std::to_string(iv.lo) +
                       " > hi " + std::to_string(iv.hi));
    }
    lo_.push_back(iv.lo);
    hi_.push_back(iv.hi);
  }
  if (const auto* sel = std::get_if<SelectionSpec>(&structure_)) {
    if (sel->p < 1 || sel->p > n) {
      throw InputError("p: need 1 <= p <= n, got p = " + std::to_string(sel->p));
    }
  } else {
    validate_graph(std::get<GraphSpec>(structure_), n);
  }
}

UncertaintySet Instance::uncertainty() const {
  UncertaintySet u;
  u.intervals.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) u.intervals.push_back(interval(i));
  return u;
}

const SelectionSpec& Instance::selection() const {
  const auto* sel = std::get_if<SelectionSpec>(&structure_);
  if (!sel) throw InputError("instance is not a selection instance");
  return *sel;
}

const GraphSpec& Instance::graph() const {
  const auto* g = std::get_if<GraphSpec>(&structure_);
  if (!g) throw InputError("instance is not a shortest-path instance");
  return *g;
}

void Instance::check_scenario(const Scenario& c) const {
  if (c.costs.size() != size()) throw InputError("scenario: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (c.costs[i] < lo_[i] || c.costs[i] > hi_[i]) {
      throw InputError("scenario[" + std::to_string(i) + "]: outside its interval");
    }
  }
}

void Instance::check_length(const BinaryVector& v, const char* what) const {
  if (v.size() != size()) {
    throw InputError(std::string(what) + ": length " + std::to_string(v.size()) +
                     " != n = " + std::to_string(size()));
  }
}

Instance make_selection_instance(std::vector<Cost> first_stage, std::vector<Cost> lo,
                                 std::vector<Cost> hi, std::size_t p) {
  if (lo.size() != hi.size()) throw InputError("interval_lo/interval_hi: length mismatch");
  UncertaintySet u;
  for (std::size_t i = 0; i < lo.size(); ++i) u.intervals.push_back({lo[i], hi[i]});
  return Instance(std::move(first_stage), u, SelectionSpec{p});
}

}  // namespace tsr
