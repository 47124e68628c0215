#include "spancat/instances.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spancat {

namespace {

using nlohmann::json;

FiniteSet parse_set(const json& j) {
  if (!j.is_object() || !j.contains("size") ||
      !j["size"].is_number_integer() || j["size"].get<int>() < 0)
    throw ValidationError("set needs a non-negative integer size");
  int n = j["size"].get<int>();
  if (j.contains("labels")) {
    if (!j["labels"].is_array() ||
        static_cast<int>(j["labels"].size()) != n)
      throw ValidationError("labels must list one name per element");
    std::vector<std::string> names;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ValidationError("labels must be strings");
      names.push_back(l.get<std::string>());
    }
    return FiniteSet(n, std::move(names));
  }
  return FiniteSet(n);
}

const FiniteSet& named_set(const Instance& inst, const std::string& name) {
  auto it = inst.sets.find(name);
  if (it == inst.sets.end())
    throw ValidationError("unknown set '" + name + "'");
  return it->second;
}

const FiniteFunction& named_function(const Instance& inst,
                                     const std::string& name) {
  auto it = inst.functions.find(name);
  if (it == inst.functions.end())
    throw ValidationError("unknown function '" + name + "'");
  return it->second;
}

FiniteFunction parse_function(const Instance& inst, const json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") ||
      !j.contains("table") || !j["table"].is_array())
    throw ValidationError("function needs dom, cod and a table");
  const FiniteSet& dom = named_set(inst, j["dom"].get<std::string>());
  const FiniteSet& cod = named_set(inst, j["cod"].get<std::string>());
  std::vector<int> table;
  for (const auto& v : j["table"]) {
    if (!v.is_number_integer())
      throw ValidationError("function tables hold integers");
    table.push_back(v.get<int>());
  }
  if (static_cast<int>(table.size()) != dom.size)
    throw ValidationError("function table length must match the domain");
  for (int v : table)
    if (v < 0 || v >= cod.size)
      throw ValidationError("function table entry out of range");
  return FiniteFunction(dom, cod, std::move(table));
}

std::vector<int> parse_table(const json& j) {
  if (!j.is_array()) throw ValidationError("witness table must be an array");
  std::vector<int> t;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ValidationError("witness tables hold integers");
    t.push_back(v.get<int>());
  }
  return t;
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw ValidationError("instance file must hold an object");
  Instance inst;
  if (j.contains("sets"))
    for (const auto& [name, body] : j["sets"].items())
      inst.sets.emplace(name, parse_set(body));
  if (j.contains("functions"))
    for (const auto& [name, body] : j["functions"].items())
      inst.functions.emplace(name, parse_function(inst, body));
  if (j.contains("spans"))
    for (const auto& [name, body] : j["spans"].items()) {
      if (!body.is_object() || !body.contains("left") ||
          !body.contains("right"))
        throw ValidationError("span needs left and right function names");
      const FiniteFunction& l =
          named_function(inst, body["left"].get<std::string>());
      const FiniteFunction& r =
          named_function(inst, body["right"].get<std::string>());
      if (l.dom != r.dom)
        throw ValidationError("span legs must share an apex");
      inst.spans.emplace(name, Span(l, r));
    }
  if (j.contains("matrices"))
    for (const auto& [name, body] : j["matrices"].items()) {
      if (!body.is_object() || !body.contains("rows") ||
          !body.contains("cols") || !body.contains("entries"))
        throw ValidationError("matrix needs rows, cols and entries");
      std::vector<FiniteSet> rows, cols;
      for (const auto& rn : body["rows"])
        rows.push_back(named_set(inst, rn.get<std::string>()));
      for (const auto& cn : body["cols"])
        cols.push_back(named_set(inst, cn.get<std::string>()));
      std::vector<std::vector<Span>> entries;
      for (const auto& row : body["entries"]) {
        std::vector<Span> er;
        for (const auto& cell : row) {
          auto it = inst.spans.find(cell.get<std::string>());
          if (it == inst.spans.end())
            throw ValidationError("unknown span '" +
                                  cell.get<std::string>() + "'");
          er.push_back(it->second);
        }
        entries.push_back(std::move(er));
      }
      try {
        inst.matrices.emplace(name,
                              SpanMatrix(std::move(rows), std::move(cols),
                                         std::move(entries)));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
    }
  if (j.contains("witnesses"))
    for (const auto& body : j["witnesses"]) {
      if (!body.is_object() || !body.contains("check"))
        throw ValidationError("witness needs a check name");
      WitnessClaim c;
      c.check = body["check"].get<std::string>();
      if (body.contains("set")) c.set = body["set"].get<std::string>();
      if (body.contains("span")) c.span = body["span"].get<std::string>();
      if (body.contains("span_b")) c.span_b = body["span_b"].get<std::string>();
      if (body.contains("table")) c.table = parse_table(body["table"]);
      if (c.check != "separable" && c.check != "frobenius" &&
          c.check != "beck" && c.check != "comonadic")
        throw ValidationError("unknown witness check '" + c.check + "'");
      inst.witnesses.push_back(std::move(c));
    }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("parse error: ") + e.what());
  }
  return parse_instance(j);
}

json report_entry_to_json(const AxiomReport& r) {
  json j;
  j["subject"] = r.subject;
  j["holds"] = r.holds;
  j["bounded"] = r.bounded;
  if (r.witness) {
    j["witness"] = json{{"table", r.witness->map.table},
                        {"source_left", r.witness->source.left.table},
                        {"source_right", r.witness->source.right.table},
                        {"target_left", r.witness->target.left.table},
                        {"target_right", r.witness->target.right.table}};
  }
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

bool SuiteReport::all_hold() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomReport& r) { return r.holds; });
}

json report_to_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["bound"] = r.bound;
  j["results"] = json::array();
  for (const AxiomReport& e : r.results)
    j["results"].push_back(report_entry_to_json(e));
  return j;
}

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  out << "bound: " << r.bound << " (objects checked: " << r.bound + 1
      << ")\n";
  for (const AxiomReport& e : r.results) {
    out << (e.holds ? "  ok   " : "  FAIL ") << e.subject;
    if (e.bounded) out << " [bounded]";
    if (e.counterexample) out << " -- " << *e.counterexample;
    out << "\n";
  }
  out << (r.all_hold() ? "all checks hold" : "some checks failed") << "\n";
  return out.str();
}

}  // namespace spancat
