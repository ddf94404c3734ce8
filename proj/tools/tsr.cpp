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


#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "tsr/core/types.hpp"

namespace {

using namespace tsr::cli;

template <typename Run>
int guarded(Run&& run) {
  try {
    return run();
  } catch (const tsr::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const tsr::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const tsr::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage minmax regret solvers, generators and model export"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("instance", solve.instance, "Instance JSON file")->required();
  s->add_option("--method", solve.method, "exact|greedy|midpoint|colgen|pn|few-distinct")
      ->check(CLI::IsMember({"exact", "greedy", "midpoint", "colgen", "pn", "few-distinct"}));
  s->add_option("-L,--L", solve.L, "Greedy: start from every subset of at most L items");
  s->add_option("--seed-cut", solve.seed_cut, "Greedy: the only seed, as 1-based items (e.g. 1,3)");
  s->add_option("--budget", solve.budget, "Node, pair or composition budget of the method");
  s->add_flag("--trace", solve.trace, "Stream the column generation log to stderr");
  s->add_flag("--oracle", solve.oracle, "Compare with the brute-force optimum");
  s->add_flag("--no-time", solve.quiet_time, "Omit the wall time line");

  RegretArgs regret;
  auto* r = app.add_subcommand("regret", "Maximum regret of a first-stage solution");
  r->add_option("instance", regret.instance, "Instance JSON file")->required();
  r->add_option("--x", regret.x, "First-stage solution as a 0/1 string")->required();
  r->add_option("--method", regret.method, "fast|enum|oracle")
      ->check(CLI::IsMember({"fast", "enum", "oracle"}));
  r->add_option("--cert", regret.cert, "Write the certificate JSON here");
  r->add_option("--budget", regret.budget, "Pair budget for enum and oracle");
  r->add_flag("--no-time", regret.quiet_time, "Omit the wall time line");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--family", gen.family,
                "random-selection|random-sp|diamond|partition-tstr|partition-regret|hamiltonian-inc|"
                "midpoint-gap")
      ->required();
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--n", gen.n, "random-selection: items");
  g->add_option("--p", gen.p, "random-selection: p (default: random in 1..n)");
  g->add_option("--nodes", gen.nodes, "random-sp, hamiltonian-inc: nodes");
  g->add_option("--arcs", gen.arcs, "random-sp: arcs");
  g->add_option("--max-cost", gen.max_cost, "random families: largest cost");
  g->add_option("--variant", gen.variant, "simple|relaxed");
  g->add_option("--a", gen.a, "partition families: comma-separated positive integers");
  g->add_option("--digraph", gen.digraph, "hamiltonian-inc: arcs as tail-head,...");
  g->add_option("--v1", gen.v1, "hamiltonian-inc: first node");
  g->add_option("--vn", gen.vn, "hamiltonian-inc: last node (default nodes-1)");
  g->add_option("--M", gen.big_m, "diamond: the large constant M");
  g->add_option("--ratio", gen.ratio, "midpoint-gap: required regret ratio");
  g->add_option("--max-trials", gen.max_trials, "midpoint-gap: search budget");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "Write an LP model");
  e->add_option("instance", exp.instance, "Instance JSON file")->required();
  e->add_option("--model", exp.model, "compact-selection|adversarial|regret-eval|p-pi")->required();
  e->add_option("--x", exp.x, "adversarial, regret-eval: first-stage solution");
  e->add_option("--pi", exp.pi, "p-pi: profile k,l");
  e->add_option("--budget", exp.budget, "adversarial: recourse enumeration budget");
  e->add_option("--out", exp.out, "Output file (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run methods over a directory of instances");
  b->add_option("dir", bench.dir, "Directory of instance JSON files")->required();
  b->add_option("--methods", bench.methods, "Comma-separated methods");
  b->add_flag("--oracle", bench.oracle, "Add brute-force optimum, gap and ratio");
  b->add_option("--budget", bench.budget, "Budget passed to every method");
  b->add_option("--out", bench.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ok) {
    return app.exit(ok);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  if (*s) return guarded([&] { return cmd_solve(solve, std::cout, std::cerr); });
  if (*r) return guarded([&] { return cmd_regret(regret, std::cout, std::cerr); });
  if (*g) return guarded([&] { return cmd_gen(gen, std::cout, std::cerr); });
  if (*e) return guarded([&] { return cmd_export(exp, std::cout, std::cerr); });
  return guarded([&] { return cmd_bench(bench, std::cout, std::cerr); });
}
