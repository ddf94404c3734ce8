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

#include "tsr/engine/engine.hpp"

namespace tsr::engine {
namespace {

class Search {
 public:
  Search(const BnbProblem& problem, const BnbOptions& options)
      : problem_(problem), options_(options), prefix_(problem.n) {}

  BnbResult run() {
    if (options_.cutoff) best_ = *options_.cutoff;
    visit(0);
    result_.value = best_;
    return std::move(result_);
  }

 private:
  void visit(std::size_t depth) {
    if (++result_.nodes > options_.node_budget) {
      throw BudgetExceeded("branch-and-bound exceeded its node budget of " +
                           std::to_string(options_.node_budget));
    }
    if (problem_.can_extend && !problem_.can_extend(prefix_, depth)) return;
    if (have_bound() && problem_.lower_bound && problem_.lower_bound(prefix_, depth) >= best_) {
      return;
    }
    if (depth == problem_.n) {
      const std::optional<Cost> value = problem_.objective(prefix_);
      if (value && (!have_bound() || *value < best_)) {
        best_ = *value;
        result_.found = true;
        result_.x = prefix_;
      }
      return;
    }
    visit(depth + 1);
    prefix_.set(depth);
    visit(depth + 1);
    prefix_.set(depth, false);
  }

  bool have_bound() const { return result_.found || options_.cutoff.has_value(); }

  const BnbProblem& problem_;
  const BnbOptions& options_;
  BinaryVector prefix_;
  Cost best_ = 0;
  BnbResult result_;
};

}  // namespace

BnbResult bnb_minimize(const BnbProblem& problem, const BnbOptions& options) {
  if (!problem.objective) throw InputError("bnb_minimize: objective is required");
  return Search(problem, options).run();
}

}  // namespace tsr::engine
