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


#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsr/model_io/io.hpp"

namespace tsr::io {
namespace {

using Json = nlohmann::json;

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key + ": missing field");
  return *it;
}

std::uint64_t as_count(const Json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InputError(path + ": expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

Cost as_cost(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxCost)) {
    throw InputError(path + ": exceeds the cost limit 2^40");
  }
  const auto value = v.get<std::int64_t>();
  if (value < 0) throw InputError(path + ": must be nonnegative");
  return value;
}

std::vector<Cost> cost_list(const Json& obj, const std::string& key, std::size_t n) {
  const std::string path = "$." + key;
  const Json& arr = field(obj, key, "$");
  if (!arr.is_array()) throw InputError(path + ": expected an array");
  if (arr.size() != n) {
    throw InputError(path + ": expected n = " + std::to_string(n) + " entries, got " +
                     std::to_string(arr.size()));
  }
  std::vector<Cost> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(as_cost(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

GraphSpec parse_graph(const Json& g) {
  const std::string path = "$.graph";
  GraphSpec spec;
  spec.node_count = as_count(field(g, "nodes", path), path + ".nodes");
  spec.s = as_count(field(g, "s", path), path + ".s");
  spec.t = as_count(field(g, "t", path), path + ".t");
  const Json& variant = field(g, "variant", path);
  if (variant == "simple") {
    spec.variant = PathVariant::Simple;
  } else if (variant == "relaxed") {
    spec.variant = PathVariant::Relaxed;
  } else {
    throw InputError(path + ".variant: expected \"simple\" or \"relaxed\"");
  }
  const Json& arcs = field(g, "arcs", path);
  if (!arcs.is_array()) throw InputError(path + ".arcs: expected an array");
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::string where = path + ".arcs[" + std::to_string(a) + "]";
    if (!arcs[a].is_array() || arcs[a].size() != 2) {
      throw InputError(where + ": expected [tail, head]");
    }
    spec.arcs.push_back({as_count(arcs[a][0], where + "[0]"), as_count(arcs[a][1], where + "[1]")});
  }
  return spec;
}

void write_list(std::ostream& out, std::span<const Cost> values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << ']';
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("$: expected an object");
  const Json& kind = field(doc, "kind", "$");
  const std::uint64_t n = as_count(field(doc, "n", "$"), "$.n");
  if (n == 0) throw InputError("$.n: must be at least 1");
  if (n > kMaxElements) throw InputError("$.n: exceeds the element limit 2^16");
  std::vector<Cost> first = cost_list(doc, "first_stage_cost", n);
  std::vector<Cost> lo = cost_list(doc, "interval_lo", n);
  std::vector<Cost> hi = cost_list(doc, "interval_hi", n);
  UncertaintySet box;
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) {
      throw InputError("$.interval_lo[" + std::to_string(i) + "]: greater than interval_hi[" +
                       std::to_string(i) + "]");
    }
    box.intervals.push_back({lo[i], hi[i]});
  }
  StructureSpec structure;
  if (kind == "selection") {
    structure = SelectionSpec{as_count(field(doc, "p", "$"), "$.p")};
  } else if (kind == "shortest_path") {
    structure = parse_graph(field(doc, "graph", "$"));
  } else {
    throw InputError("$.kind: expected \"selection\" or \"shortest_path\"");
  }
  return Instance(std::move(first), box, std::move(structure));
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << "{\n";
  if (inst.is_selection()) {
    out << "  \"kind\": \"selection\",\n";
    out << "  \"n\": " << inst.size() << ",\n";
    out << "  \"p\": " << inst.selection().p << ",\n";
  } else {
    const GraphSpec& g = inst.graph();
    out << "  \"kind\": \"shortest_path\",\n";
    out << "  \"n\": " << inst.size() << ",\n";
    out << "  \"graph\": {\n";
    out << "    \"nodes\": " << g.node_count << ",\n";
    out << "    \"s\": " << g.s << ",\n";
    out << "    \"t\": " << g.t << ",\n";
    out << "    \"variant\": \"" << (g.variant == PathVariant::Simple ? "simple" : "relaxed")
        << "\",\n";
    out << "    \"arcs\": [";
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
      out << (a ? ", " : "") << '[' << g.arcs[a].tail << ", " << g.arcs[a].head << ']';
    }
    out << "]\n  },\n";
  }
  out << "  \"first_stage_cost\": ";
  write_list(out, inst.first_stage());
  out << ",\n  \"interval_lo\": ";
  write_list(out, inst.lower());
  out << ",\n  \"interval_hi\": ";
  write_list(out, inst.upper());
  out << "\n}\n";
  return out.str();
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string write_certificate(const Instance& inst, const RegretCertificate& cert) {
  const std::size_t n = inst.size();
  if (cert.worst_scenario.costs.size() != n) throw InputError("certificate: scenario length");
  std::string bits(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    const Cost c = cert.worst_scenario.costs[i];
    if (c == inst.upper()[i]) {
      bits[i] = '1';
    } else if (c != inst.lower()[i]) {
      throw InputError("certificate: scenario is not extreme at index " + std::to_string(i));
    }
  }
  std::ostringstream out;
  out << "{\n";
  out << "  \"value\": " << cert.value << ",\n";
  out << "  \"x\": \"" << cert.first_stage.to_string() << "\",\n";
  out << "  \"witness\": {\"u\": \"" << cert.witness.u.to_string() << "\", \"v\": \""
      << cert.witness.v.to_string() << "\"},\n";
  out << "  \"scenario_bits\": \"" << bits << "\",\n";
  out << "  \"scenario\": ";
  write_list(out, cert.worst_scenario.costs);
  out << ",\n  \"recourse\": \"" << cert.best_recourse.to_string() << "\"\n}\n";
  return out.str();
}

RegretCertificate parse_certificate(const Instance& inst, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  const std::size_t n = inst.size();
  auto bits = [&](const Json& v, const std::string& path) {
    if (!v.is_string()) throw InputError(path + ": expected a bit string");
    BinaryVector b;
    try {
      b = BinaryVector::parse(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
    if (b.size() != n) throw InputError(path + ": expected " + std::to_string(n) + " bits");
    return b;
  };
  RegretCertificate cert;
  const Json& value = field(doc, "value", "$");
  if (!value.is_number_integer()) throw InputError("$.value: expected an integer");
  cert.value = value.get<Cost>();
  cert.first_stage = bits(field(doc, "x", "$"), "$.x");
  const Json& witness = field(doc, "witness", "$");
  cert.witness.u = bits(field(witness, "u", "$.witness"), "$.witness.u");
  cert.witness.v = bits(field(witness, "v", "$.witness"), "$.witness.v");
  const BinaryVector high = bits(field(doc, "scenario_bits", "$"), "$.scenario_bits");
  cert.worst_scenario.costs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cert.worst_scenario.costs[i] = high[i] ? inst.upper()[i] : inst.lower()[i];
  }
  if (doc.contains("scenario")) {
    if (cost_list(doc, "scenario", n) != cert.worst_scenario.costs) {
      throw InputError("$.scenario: disagrees with scenario_bits");
    }
  }
  cert.best_recourse = bits(field(doc, "recourse", "$"), "$.recourse");
  return cert;
}

}  // namespace tsr::io
