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


#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include "tsr/core/regret.hpp"
#include "tsr/engine/engine.hpp"
#include "tsr/model_io/io.hpp"
#include "tsr/oracle/oracle.hpp"
#include "tsr/selection/algorithms.hpp"
#include "tsr/selection/formulations.hpp"
#include "tsr/selection/selection.hpp"
#include "tsr/shortest_path/shortest_path.hpp"
#include "tsr/structures.hpp"

namespace tsr::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct RunReport {
  std::string method;
  std::string status = "ok";
  Cost value = 0;
  BinaryVector x;
  double time_ms = 0;
  std::optional<Cost> bound;  // heuristic objective when it differs from Z(x)
  std::optional<std::uint64_t> nodes;
  std::optional<std::uint64_t> iterations;
  std::optional<std::uint64_t> evaluations;
  std::optional<Cost> oracle_value;
};

struct MethodOptions {
  std::size_t L = 0;
  std::vector<std::size_t> seed;
  std::optional<std::uint64_t> budget;
  std::ostream* trace = nullptr;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    parts.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

long long parse_integer(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(what) + ": '" + token + "' is not an integer");
  }
}

std::vector<Cost> parse_cost_list(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string(what) + " is required");
  std::vector<Cost> values;
  for (const auto& token : split(text, ',')) values.push_back(parse_integer(token, what));
  return values;
}

std::vector<std::size_t> parse_seed(const std::string& text, std::size_t n) {
  std::vector<std::size_t> items;
  if (text.empty()) return items;
  for (Cost v : parse_cost_list(text, "--seed-cut")) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InputError("--seed-cut: item " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    items.push_back(static_cast<std::size_t>(v - 1));
  }
  return items;
}

BinaryVector parse_x(const Instance& inst, const std::string& text) {
  if (text.empty()) throw InputError("--x is required");
  BinaryVector x = BinaryVector::parse(text);
  inst.check_length(x, "--x");
  return x;
}

void require_selection(const Instance& inst, const std::string& method) {
  if (!inst.is_selection()) {
    throw InputError("method '" + method + "' applies to selection instances only");
  }
}

// Z(x) through the structure's own routine (O(n^2) for selection).
Cost regret_value(const StructureOracle& structure, const BinaryVector& x) {
  return structure.max_regret(x).value;
}

RunReport run_method(const Instance& inst, const StructureOracle& structure,
                     const std::string& method, const MethodOptions& opt) {
  RunReport r;
  r.method = method;
  const auto start = Clock::now();
  if (method == "exact") {
    if (inst.is_selection()) {
      selection::ExactOptions eo;
      if (opt.budget) eo.node_budget = *opt.budget;
      const auto res = selection::solve_exact(inst, eo);
      r.value = res.value;
      r.x = res.x;
      r.nodes = res.nodes;
    } else {
      const auto res = sp::solve_tstr_sp(inst, opt.budget.value_or(kDefaultPairBudget));
      r.value = res.value;
      r.x = res.x;
      r.evaluations = res.evaluated;
    }
  } else if (method == "colgen") {
    engine::ColGenOptions co;
    if (opt.budget) co.node_budget = *opt.budget;
    co.trace = opt.trace;
    const auto res = engine::solve_colgen(structure, co);
    r.value = res.value;
    r.x = res.x;
    r.iterations = res.state.iterations;
  } else if (method == "greedy") {
    require_selection(inst, method);
    selection::GreedyOptions go;
    go.L = opt.L;
    if (!opt.seed.empty()) go.seeds = {opt.seed};
    const auto res = selection::solve_greedy(inst, go);
    r.x = res.x;
    r.bound = res.value;
    r.evaluations = res.evaluations;
    r.value = regret_value(structure, r.x);
  } else if (method == "midpoint") {
    r.x = midpoint_heuristic(structure);
    r.value = regret_value(structure, r.x);
  } else if (method == "pn") {
    require_selection(inst, method);
    r.x = selection::solve_p_equals_n(inst);
    r.value = regret_value(structure, r.x);
  } else if (method == "few-distinct") {
    require_selection(inst, method);
    selection::FewDistinctOptions fo;
    if (opt.budget) fo.composition_budget = *opt.budget;
    const auto res = selection::solve_few_distinct(inst, fo);
    r.value = res.value;
    r.x = res.x;
    r.evaluations = res.compositions;
  } else {
    throw InputError("unknown method '" + method + "'");
  }
  r.time_ms = elapsed_ms(start);
  return r;
}

// Brute-force optimum when the instance is small enough, nullopt otherwise.
std::optional<Cost> oracle_optimum(const StructureOracle& structure) {
  if (structure.instance().size() > oracle::kDefaultMaxN) return std::nullopt;
  try {
    return oracle::brute_tstr(structure).value;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

// Brute force when possible, otherwise the exact solver of the structure.
std::optional<Cost> reference_optimum(const Instance& inst, const StructureOracle& structure) {
  if (auto v = oracle_optimum(structure)) return v;
  try {
    if (inst.is_selection()) return selection::solve_exact(inst).value;
    return sp::solve_tstr_sp(inst).value;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

void print_report(const RunReport& r, std::ostream& out, bool show_time) {
  out << "method: " << r.method << '\n';
  out << "status: " << r.status << '\n';
  out << "value: " << r.value << '\n';
  out << "x: " << r.x.to_string() << '\n';
  if (r.bound) out << "objective: " << *r.bound << '\n';
  if (r.nodes) out << "nodes: " << *r.nodes << '\n';
  if (r.iterations) out << "iterations: " << *r.iterations << '\n';
  if (r.evaluations) out << "evaluations: " << *r.evaluations << '\n';
  if (r.oracle_value) {
    out << "oracle_value: " << *r.oracle_value << '\n';
    out << "gap: " << r.value - *r.oracle_value << '\n';
  }
  if (show_time) out << "time_ms: " << format_ms(r.time_ms) << '\n';
}

PathVariant parse_variant(const std::string& text) {
  if (text == "simple") return PathVariant::Simple;
  if (text == "relaxed") return PathVariant::Relaxed;
  throw InputError("--variant must be simple or relaxed, got '" + text + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::save_text(path, text);
  }
}

Instance gen_random_selection(const GenArgs& g) {
  if (g.n == 0 || g.n > kMaxElements) throw InputError("--n must be in 1..65536");
  if (g.max_cost < 0 || g.max_cost > kMaxCost) throw InputError("--max-cost out of range");
  if (g.p && (*g.p == 0 || *g.p > g.n)) throw InputError("--p must be in 1..n");
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<Cost> value(0, g.max_cost);
  std::vector<Cost> first(g.n), lo(g.n), hi(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    first[i] = value(rng);
    const Cost a = value(rng);
    const Cost b = value(rng);
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  const std::size_t p = g.p ? *g.p : std::uniform_int_distribution<std::size_t>(1, g.n)(rng);
  return make_selection_instance(first, lo, hi, p);
}

// Random arcs without self-loops, redrawn until t is reachable from s.
Instance gen_random_sp(const GenArgs& g) {
  if (g.nodes < 2) throw InputError("--nodes must be at least 2");
  if (g.arcs == 0 || g.arcs > kMaxElements) throw InputError("--arcs must be in 1..65536");
  if (g.max_cost < 0 || g.max_cost > kMaxCost) throw InputError("--max-cost out of range");
  const PathVariant variant = parse_variant(g.variant);
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> node(0, g.nodes - 1);
  std::uniform_int_distribution<Cost> value(0, g.max_cost);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GraphSpec spec{g.nodes, {}, 0, g.nodes - 1, variant};
    std::vector<Cost> first;
    UncertaintySet box;
    for (std::size_t k = 0; k < g.arcs; ++k) {
      const std::size_t tail = node(rng);
      std::size_t head = node(rng);
      if (head == tail) head = (head + 1) % g.nodes;
      spec.arcs.push_back({tail, head});
      first.push_back(value(rng));
      const Cost a = value(rng);
      const Cost b = value(rng);
      box.intervals.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::uint8_t> all(spec.arcs.size(), 1);
    if (sp::connects(spec, all)) return Instance(std::move(first), box, std::move(spec));
  }
  throw InputError("could not draw a connected graph; add arcs or remove nodes");
}

sp::Digraph parse_digraph(const std::string& text, std::size_t nodes) {
  sp::Digraph g{nodes, {}};
  if (text.empty()) return g;
  for (const auto& token : split(text, ',')) {
    const auto ends = split(token, '-');
    if (ends.size() != 2) throw InputError("--digraph: expected tail-head, got '" + token + "'");
    const long long u = parse_integer(ends[0], "--digraph");
    const long long v = parse_integer(ends[1], "--digraph");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= nodes ||
        static_cast<std::size_t>(v) >= nodes) {
      throw InputError("--digraph: node outside 0.." + std::to_string(nodes - 1));
    }
    g.arcs.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  return g;
}

std::string scenario_text(const Scenario& c) {
  std::string s;
  for (std::size_t i = 0; i < c.costs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(c.costs[i]);
  }
  return s;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const Instance inst = io::load_instance(args.instance);
  const auto structure = make_structure(inst);
  MethodOptions opt;
  opt.L = args.L;
  opt.seed = parse_seed(args.seed_cut, inst.size());
  if (!opt.seed.empty() && args.method != "greedy") {
    throw InputError("--seed-cut applies to --method greedy only");
  }
  opt.budget = args.budget;
  if (args.trace) opt.trace = &err;
  RunReport r = run_method(inst, *structure, args.method, opt);
  if (args.oracle) {
    r.oracle_value = oracle_optimum(*structure);
    if (!r.oracle_value) err << "warning: instance too large for the brute-force oracle\n";
  } else if (args.method == "midpoint") {
    r.oracle_value = reference_optimum(inst, *structure);
  }
  print_report(r, out, !args.quiet_time);
  return kOk;
}

int cmd_regret(const RegretArgs& args, std::ostream& out, std::ostream&) {
  const Instance inst = io::load_instance(args.instance);
  const auto structure = make_structure(inst);
  const BinaryVector x = parse_x(inst, args.x);
  if (!structure->is_first_stage_feasible(x)) {
    throw InfeasibleError("x = " + x.to_string() + " has no completion");
  }
  const std::uint64_t budget = args.budget.value_or(kDefaultPairBudget);
  const auto start = Clock::now();
  RegretCertificate cert;
  if (args.method == "fast") {
    cert = structure->max_regret(x);
  } else if (args.method == "enum") {
    cert = max_regret_enum(*structure, x, budget);
  } else if (args.method == "oracle") {
    cert = oracle::brute_Z(*structure, x, oracle::kDefaultMaxN, budget);
  } else {
    throw InputError("--method must be fast, enum or oracle");
  }
  const double ms = elapsed_ms(start);
  out << "method: " << args.method << '\n';
  out << "status: ok\n";
  out << "value: " << cert.value << '\n';
  out << "x: " << x.to_string() << '\n';
  out << "witness_u: " << cert.witness.u.to_string() << '\n';
  out << "witness_v: " << cert.witness.v.to_string() << '\n';
  out << "scenario: " << scenario_text(cert.worst_scenario) << '\n';
  out << "recourse: " << cert.best_recourse.to_string() << '\n';
  if (!args.quiet_time) out << "time_ms: " << format_ms(ms) << '\n';
  if (!args.cert.empty()) io::save_text(args.cert, io::write_certificate(inst, cert));
  return kOk;
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  // Side information (x, scenario) goes to stdout only when the instance
  // itself goes to a file.
  std::ostream& info = args.out.empty() ? err : out;
  std::string text;
  if (args.family == "random-selection") {
    text = io::emit_instance(gen_random_selection(args));
  } else if (args.family == "random-sp") {
    text = io::emit_instance(gen_random_sp(args));
  } else if (args.family == "diamond") {
    text = io::emit_instance(sp::gen_diamond(parse_variant(args.variant), args.big_m));
  } else if (args.family == "partition-tstr") {
    const auto a = parse_cost_list(args.a, "--a");
    text = io::emit_instance(sp::gen_partition_tstr(a, parse_variant(args.variant)));
    // Yes-instances have optimum <= 3b with b = sum(a)/2 (costs are doubled).
    Cost sum = 0;
    for (Cost v : a) sum = checked_add(sum, v);
    info << "threshold: " << 3 * (sum / 2) << '\n';
  } else if (args.family == "partition-regret") {
    const auto a = parse_cost_list(args.a, "--a");
    const auto gadget = sp::gen_partition_regret(a, parse_variant(args.variant));
    text = io::emit_instance(gadget.instance);
    info << "x: " << gadget.x.to_string() << '\n';
  } else if (args.family == "hamiltonian-inc") {
    const std::size_t vn = args.vn.value_or(args.nodes - 1);
    const auto gadget = sp::gen_hamiltonian_inc(parse_digraph(args.digraph, args.nodes), args.v1, vn);
    text = io::emit_instance(gadget.instance);
    info << "x: " << gadget.x.to_string() << '\n';
    info << "scenario: " << scenario_text(gadget.scenario) << '\n';
  } else if (args.family == "midpoint-gap") {
    const auto found = oracle::search_midpoint_gap(args.ratio, args.seed, args.max_trials);
    if (!found) {
      throw BudgetExceeded("no instance with midpoint regret above " + std::to_string(args.ratio) +
                           " x optimum within " + std::to_string(args.max_trials) + " trials");
    }
    text = io::emit_instance(found->instance);
    info << "midpoint_x: " << found->midpoint_x.to_string() << '\n';
    info << "midpoint_regret: " << found->midpoint_regret << '\n';
    info << "optimal_x: " << found->optimal_x.to_string() << '\n';
    info << "optimum: " << found->optimum << '\n';
    info << "trials: " << found->trials << '\n';
  } else {
    throw InputError("unknown family '" + args.family + "'");
  }
  emit(text, args.out, out);
  return kOk;
}

int cmd_export(const ExportArgs& args, std::ostream& out, std::ostream&) {
  const Instance inst = io::load_instance(args.instance);
  io::MIPModel model;
  if (args.model == "compact-selection") {
    require_selection(inst, args.model);
    model = selection::build_compact_mip(inst);
  } else if (args.model == "adversarial") {
    if (args.x.empty()) throw InputError("--model adversarial needs --x");
    require_selection(inst, args.model);
    const BinaryVector x = parse_x(inst, args.x);
    const auto structure = make_structure(inst);
    if (!structure->is_first_stage_feasible(x)) {
      throw InfeasibleError("x = " + x.to_string() + " has no completion");
    }
    std::vector<BinaryVector> ys;
    structure->for_each_recourse(
        x, [&](const BinaryVector& y) { ys.push_back(y); },
        args.budget.value_or(kDefaultPairBudget));
    model = io::build_adversarial_mip(inst, x, ys);
  } else if (args.model == "regret-eval") {
    if (args.x.empty()) throw InputError("--model regret-eval needs --x");
    require_selection(inst, args.model);
    model = selection::build_regret_eval_mip(inst, parse_x(inst, args.x));
  } else if (args.model == "p-pi") {
    require_selection(inst, args.model);
    const auto kl = parse_cost_list(args.pi, "--pi");
    if (kl.size() != 2) throw InputError("--pi expects two values k,l");
    model = selection::build_p_pi_mip(inst, selection::make_profile(inst, kl[0], kl[1]));
  } else {
    throw InputError("--model must be compact-selection, adversarial, regret-eval or p-pi");
  }
  emit(io::export_lp(model), args.out, out);
  return kOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(args.dir, ec)) throw InputError("not a directory: " + args.dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no .json instances in " + args.dir);

  const auto methods = split(args.methods, ',');
  MethodOptions opt;
  opt.budget = args.budget;

  std::ostringstream csv;
  csv << "instance,method,status,value,x,time_ms,oracle_value,gap,ratio\n";
  std::size_t loaded = 0;
  for (const auto& path : files) {
    std::optional<Instance> inst;
    try {
      inst.emplace(io::load_instance(path));
    } catch (const Error& e) {
      err << "warning: skipping " << path.filename().string() << ": " << e.what() << '\n';
      continue;
    }
    ++loaded;
    const auto structure = make_structure(*inst);
    const std::optional<Cost> oracle = args.oracle ? oracle_optimum(*structure) : std::nullopt;
    const bool have_ref = oracle.has_value();
    const Cost ref = have_ref ? *oracle : 0;
    for (const auto& method : methods) {
      RunReport r;
      r.method = method;
      try {
        r = run_method(*inst, *structure, method, opt);
      } catch (const InfeasibleError&) {
        r.status = "infeasible";
      } catch (const BudgetExceeded&) {
        r.status = "budget";
      } catch (const InputError&) {
        r.status = "not-applicable";
      } catch (const Error&) {
        r.status = "error";
      }
      const bool ok = r.status == "ok";
      csv << csv_field(path.filename().string()) << ',' << method << ',' << r.status << ',';
      csv << (ok ? std::to_string(r.value) : "") << ',' << (ok ? r.x.to_string() : "") << ',';
      csv << (ok ? format_ms(r.time_ms) : "") << ',';
      csv << (have_ref ? std::to_string(ref) : "") << ',';
      if (ok && have_ref) {
        csv << r.value - ref << ',';
        if (ref > 0) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.6f",
                        static_cast<double>(r.value) / static_cast<double>(ref));
          csv << buf;
        } else {
          csv << (r.value == 0 ? "1.000000" : "inf");
        }
      } else {
        csv << ',';
      }
      csv << '\n';
    }
  }
  if (loaded == 0) throw InputError("no instance in " + args.dir + " could be read");
  emit(csv.str(), args.out, out);
  return kOk;
}

}  // namespace tsr::cli
