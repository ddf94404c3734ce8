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


#include "tsr/structures.hpp"

#include "tsr/selection/selection.hpp"
#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr {

std::unique_ptr<StructureOracle> make_structure(const Instance& inst) {
  if (inst.is_selection()) return std::make_unique<selection::SelectionOracle>(inst);
  return std::make_unique<sp::ShortestPathOracle>(inst);
}

}  // namespace tsr
