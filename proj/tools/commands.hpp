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
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tsr::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInfeasible = 3,
  kBudget = 4,
};

struct SolveArgs {
  std::string instance;
  std::string method = "exact";
  std::size_t L = 0;
  std::string seed_cut;  // comma-separated 1-based items forming the only greedy seed
  std::optional<std::uint64_t> budget;
  bool trace = false;
  bool oracle = false;
  bool quiet_time = false;
};

struct RegretArgs {
  std::string instance;
  std::string x;
  std::string method = "fast";
  std::string cert;
  std::optional<std::uint64_t> budget;
  bool quiet_time = false;
};

struct GenArgs {
  std::string family;
  std::uint64_t seed = 1;
  std::size_t n = 8;
  std::optional<std::size_t> p;
  std::size_t nodes = 6;
  std::size_t arcs = 10;
  long long max_cost = 20;
  std::string variant = "simple";
  std::string a;
  std::string digraph;  // "0-1,1-2,..." for hamiltonian-inc
  std::size_t v1 = 0;
  std::optional<std::size_t> vn;
  long long big_m = 1000;
  long long ratio = 100;
  std::uint64_t max_trials = 1'000'000;
  std::string out;
};

struct ExportArgs {
  std::string instance;
  std::string model;
  std::string x;
  std::string pi;
  std::string out;
  std::optional<std::uint64_t> budget;
};

struct BenchArgs {
  std::string dir;
  std::string methods = "exact,greedy,midpoint";
  bool oracle = false;
  std::string out;
  std::optional<std::uint64_t> budget;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_regret(const RegretArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_export(const ExportArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace tsr::cli
