#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spancat/axioms.hpp"
#include "spancat/comonads.hpp"
#include "spancat/instances.hpp"
#include "spancat/suites.hpp"

using namespace spancat;
using nlohmann::json;

namespace {

const Span& named_span(const Instance& inst, const std::string& name) {
  auto it = inst.spans.find(name);
  if (it == inst.spans.end())
    throw ValidationError("unknown span '" + name + "'");
  return it->second;
}

json span_to_json(const Span& r) {
  return json{{"apex", r.apex().size},
              {"left", r.left.table},
              {"right", r.right.table}};
}

int cmd_check(const std::string& path, const std::string& suite, int bound,
              const std::string& format) {
  if (bound > 6) {
    std::cerr << "warning: bound " << bound << " capped at 6\n";
    bound = 6;
  }
  Instance inst = load_instance(path);
  SuiteReport report = run_suite(suite, inst, bound);
  if (format == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
  return report.all_hold() ? 0 : 1;
}

int cmd_compose(const std::string& path,
                const std::vector<std::string>& names) {
  Instance inst = load_instance(path);
  if (names.empty()) throw ValidationError("compose needs span names");
  Span acc = named_span(inst, names.front());
  for (size_t i = 1; i < names.size(); ++i) {
    const Span& next = named_span(inst, names[i]);
    if (acc.tgt() != next.src()) {
      std::cerr << "error: spans are not composable\n";
      return 1;
    }
    acc = compose_spans(acc, next);
  }
  std::cout << json{{"composite", span_to_json(acc)}}.dump(2) << "\n";
  return 0;
}

int cmd_tabulate(const std::string& path, const std::string& name) {
  Instance inst = load_instance(path);
  const Span& r = named_span(inst, name);
  Tabulation tb = tabulate(r);
  json out{{"apex", tb.apex_object.size},
           {"u", function_from_map(tb.u).table},
           {"v", function_from_map(tb.v).table},
           {"omega", tb.omega.map.table}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_em(const std::string& path, const std::string& name) {
  Instance inst = load_instance(path);
  const Span& g = named_span(inst, name);
  if (g.src() != g.tgt() || !find_copoint(g)) {
    std::cerr << "error: no copoint, the span is not a comonad carrier\n";
    return 1;
  }
  Comonad c = comonad_on(g);
  EMObject em = em_object(c);
  json out{{"object", em.object.size},
           {"projection", function_from_map(em.projection).table},
           {"coalgebra", em.coalgebra.map.table}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_matrix(const std::string& path, const std::string& name,
               const std::string& with) {
  Instance inst = load_instance(path);
  auto it = inst.matrices.find(name);
  if (it == inst.matrices.end())
    throw ValidationError("unknown matrix '" + name + "'");
  if (with.empty()) {
    Span assembled = span_of_matrix(it->second);
    std::cout << json{{"assembled", span_to_json(assembled)}}.dump(2) << "\n";
    return 0;
  }
  auto it2 = inst.matrices.find(with);
  if (it2 == inst.matrices.end())
    throw ValidationError("unknown matrix '" + with + "'");
  SpanMatrix prod = matrix_compose(it->second, it2->second);
  json entries = json::array();
  for (const auto& row : prod.entries) {
    json jr = json::array();
    for (const Span& e : row) jr.push_back(span_to_json(e));
    entries.push_back(jr);
  }
  std::cout << json{{"product", entries}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checker for span constructions over finite sets"};
  app.require_subcommand(1);

  std::string path, suite = "all", format = "text", span_name, with;
  std::vector<std::string> names;
  int bound = 4;

  auto* check = app.add_subcommand("check", "run a checker suite");
  check->add_option("file", path)->required();
  check->add_option("--suite", suite);
  check->add_option("--bound", bound);
  check->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* compose = app.add_subcommand("compose", "compose named spans");
  compose->add_option("file", path)->required();
  compose->add_option("spans", names);

  auto* tab = app.add_subcommand("tabulate", "tabulate a named span");
  tab->add_option("file", path)->required();
  tab->add_option("span", span_name)->required();

  auto* em = app.add_subcommand("em", "Eilenberg-Moore data of a comonad");
  em->add_option("file", path)->required();
  em->add_option("span", span_name)->required();

  auto* mat = app.add_subcommand("matrix", "assemble or multiply matrices");
  mat->add_option("file", path)->required();
  mat->add_option("matrix", span_name)->required();
  mat->add_option("--compose", with);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, suite, bound, format);
    if (compose->parsed()) return cmd_compose(path, names);
    if (tab->parsed()) return cmd_tabulate(path, span_name);
    if (em->parsed()) return cmd_em(path, span_name);
    if (mat->parsed()) return cmd_matrix(path, span_name, with);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
