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


#include <set>
#include <sstream>

#include "tsr/model_io/mip_model.hpp"

namespace tsr::io {

std::size_t MIPModel::add_binary(std::string var_name) {
  variables.push_back({std::move(var_name), VarKind::Binary, Cost{0}, Cost{1}});
  return variables.size() - 1;
}

std::size_t MIPModel::add_continuous(std::string var_name, std::optional<Cost> lower,
                                     std::optional<Cost> upper) {
  variables.push_back({std::move(var_name), VarKind::Continuous, lower, upper});
  return variables.size() - 1;
}

void MIPModel::add_row(std::string row_name, std::vector<Term> terms, RowSense row_sense,
                       Cost rhs) {
  rows.push_back({std::move(row_name), std::move(terms), row_sense, rhs});
}

std::size_t MIPModel::index_of(const std::string& var_name) const {
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (variables[j].name == var_name) return j;
  }
  throw InputError("model has no variable named '" + var_name + "'");
}

std::size_t MIPModel::count(VarKind kind) const {
  std::size_t k = 0;
  for (const Variable& v : variables) k += v.kind == kind ? 1 : 0;
  return k;
}

void MIPModel::validate() const {
  std::set<std::string> names;
  for (const Variable& v : variables) {
    if (!names.insert(v.name).second) throw InputError("duplicate variable name '" + v.name + "'");
  }
  auto check = [&](const std::vector<Term>& terms, const std::string& where) {
    for (const Term& t : terms) {
      if (t.var >= variables.size()) throw InputError(where + ": dangling variable index");
    }
  };
  check(objective, "objective");
  for (const Row& r : rows) check(r.terms, "row " + r.name);
}

namespace {

void write_terms(std::ostream& out, const MIPModel& model, const std::vector<Term>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % 10 == 0) out << "\n   ";
    const Cost c = terms[k].coef;
    if (k == 0) {
      out << ' ' << c;
    } else if (c < 0) {
      out << " - " << -c;
    } else {
      out << " + " << c;
    }
    out << ' ' << model.variables[terms[k].var].name;
  }
}

const char* sense_text(RowSense s) {
  switch (s) {
    case RowSense::LessEqual:
      return "<=";
    case RowSense::GreaterEqual:
      return ">=";
    case RowSense::Equal:
      return "=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const MIPModel& model) {
  model.validate();
  std::ostringstream out;
  if (!model.name.empty()) out << "\\ " << model.name << '\n';
  for (const std::string& note : model.notes) out << "\\ " << note << '\n';

  out << (model.sense == ObjectiveSense::Minimize ? "Minimize" : "Maximize") << '\n';
  out << " obj:";
  write_terms(out, model, model.objective);
  if (model.objective_constant != 0 || model.objective.empty()) {
    const Cost c = model.objective_constant;
    if (model.objective.empty()) {
      out << ' ' << c;
    } else {
      out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    }
  }
  out << '\n';

  if (!model.rows.empty()) {
    out << "Subject To\n";
    for (const Row& r : model.rows) {
      out << ' ' << r.name << ':';
      write_terms(out, model, r.terms);
      out << ' ' << sense_text(r.sense) << ' ' << r.rhs << '\n';
    }
  }

  std::ostringstream bounds;
  for (const Variable& v : model.variables) {
    if (v.kind == VarKind::Binary) continue;
    if (!v.lower && !v.upper) {
      bounds << ' ' << v.name << " free\n";
    } else if (!v.lower) {
      bounds << " -inf <= " << v.name << " <= " << *v.upper << '\n';
    } else if (!v.upper) {
      if (*v.lower != 0) bounds << ' ' << v.name << " >= " << *v.lower << '\n';
    } else {
      bounds << ' ' << *v.lower << " <= " << v.name << " <= " << *v.upper << '\n';
    }
  }
  if (!bounds.str().empty()) out << "Bounds\n" << bounds.str();

  bool any_binary = false;
  for (const Variable& v : model.variables) {
    if (v.kind != VarKind::Binary) continue;
    if (!any_binary) out << "Binary\n";
    any_binary = true;
    out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace tsr::io
