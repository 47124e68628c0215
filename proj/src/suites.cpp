#include "spancat/suites.hpp"

#include "spancat/axioms.hpp"
#include "spancat/comonads.hpp"
#include "spancat/span_equiv.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spancat {

namespace {

int cap(int bound, int at) { return bound < at ? bound : at; }

AxiomReport prefixed(std::string name, AxiomReport r) {
  r.subject = name + ": " + r.subject;
  return r;
}

AxiomReport guarded(const std::string& subject,
                    const std::function<AxiomReport()>& body) {
  try {
    return body();
  } catch (const std::logic_error& e) {
    return AxiomReport::fail(subject, e.what());
  }
}

AxiomReport sweep_comonad_structure(const FiniteSet& a, int apex_cap) {
  std::string subject = "comonad_structure A=" + std::to_string(a.size) +
                        " apex<=" + std::to_string(apex_cap);
  for (const Span& g : all_spans_up_to(a, a, apex_cap)) {
    bool equal_legs = g.left.table == g.right.table;
    auto eps = find_copoint(g);
    if (eps.has_value() != equal_legs)
      return AxiomReport::fail(subject,
                               "copoint existence disagrees with leg equality",
                               true);
    if (!eps) continue;
    Comonad c = comultiplication(g, *eps);
    em_object(c, 2);
  }
  return AxiomReport::pass(subject, id_cell(id_span(a)), true);
}

AxiomReport sweep_wedges(const FiniteSet& a, int apex_cap, int test_bound) {
  std::string subject = "comonad_wedges A=" + std::to_string(a.size) +
                        " apex<=" + std::to_string(apex_cap);
  for (int k = 0; k <= apex_cap; ++k)
    for (const FiniteFunction& lg : all_functions(FiniteSet(k), a))
      for (int k2 = 0; k2 <= apex_cap; ++k2)
        for (const FiniteFunction& lh : all_functions(FiniteSet(k2), a)) {
          AxiomReport r =
              check_wedge_of_copointed(Span(lg, lg), Span(lh, lh), test_bound);
          if (!r.holds) return prefixed(subject, std::move(r));
        }
  return AxiomReport::pass(subject, id_cell(id_span(a)), true);
}

AxiomReport sweep_tabulations(const FiniteSet& x, const FiniteSet& a,
                              int apex_cap) {
  std::string subject = "tabulation X=" + std::to_string(x.size) +
                        " A=" + std::to_string(a.size) + " apex<=" +
                        std::to_string(apex_cap);
  for (const Span& r : all_spans_up_to(x, a, apex_cap)) {
    tabulate(r, 2);
    Comonad gr = g_of_r(r);
    // the induced comonad is the fiber-pair comonad of the paired legs
    Span pairs = map_from_function(pair_fn(r.left, r.right));
    if (!find_iso(gr.carrier, compose_spans(opposite(pairs), pairs)))
      return AxiomReport::fail(subject,
                               "induced comonad differs from the paired-leg "
                               "form",
                               true);
  }
  return AxiomReport::pass(subject, id_cell(id_span(x)), true);
}

AxiomReport sweep_beck(const FiniteSet& x, const FiniteSet& y,
                       const FiniteSet& z) {
  std::string subject = "beck_sweep X=" + std::to_string(x.size) +
                        " Y=" + std::to_string(y.size) +
                        " Z=" + std::to_string(z.size);
  for (const FiniteFunction& fa : all_functions(x, z))
    for (const FiniteFunction& fb : all_functions(y, z)) {
      AxiomReport r = check_beck_pullback(map_from_function(fa),
                                          map_from_function(fb));
      if (!r.holds) return prefixed(subject, std::move(r));
    }
  return AxiomReport::pass(subject, id_cell(id_span(x)), true);
}

AxiomReport sweep_roundtrips(const FiniteSet& x, const FiniteSet& a,
                             int apex_cap) {
  std::string subject = "roundtrip_sweep X=" + std::to_string(x.size) +
                        " A=" + std::to_string(a.size) + " apex<=" +
                        std::to_string(apex_cap);
  for (const Span& r : all_spans_up_to(x, a, apex_cap)) {
    AxiomReport rep = check_roundtrips(r, functor_f(r));
    if (!rep.holds) return prefixed(subject, std::move(rep));
  }
  return AxiomReport::pass(subject, id_cell(id_span(x)), true);
}

AxiomReport sweep_pseudofunctor(const FiniteSet& x, const FiniteSet& a,
                                const FiniteSet& b, int apex_cap) {
  std::string subject = "pseudofunctor_sweep X=" + std::to_string(x.size) +
                        " A=" + std::to_string(a.size) +
                        " B=" + std::to_string(b.size);
  for (int k1 = 0; k1 <= apex_cap; ++k1)
    for (const FiniteFunction& y1 : all_functions(FiniteSet(k1), x))
      for (const FiniteFunction& b1 : all_functions(FiniteSet(k1), a))
        for (int k2 = 0; k2 <= apex_cap; ++k2)
          for (const FiniteFunction& y2 : all_functions(FiniteSet(k2), a))
            for (const FiniteFunction& b2 : all_functions(FiniteSet(k2), b)) {
              AxiomReport r = check_pseudofunctoriality(MapSpan(y1, b1),
                                                        MapSpan(y2, b2));
              if (!r.holds) return prefixed(subject, std::move(r));
            }
  return AxiomReport::pass(subject, id_cell(id_span(x)), true);
}

AxiomReport matrix_roundtrip_report(const std::string& name,
                                    const SpanMatrix& m) {
  std::string subject = name + ": matrix_roundtrip";
  Span assembled = span_of_matrix(m);
  SpanMatrix back =
      matrix_of_span(assembled, m.row_objects, m.col_objects);
  for (size_t i = 0; i < m.entries.size(); ++i)
    for (size_t j = 0; j < m.entries[i].size(); ++j)
      if (!find_iso(m.entries[i][j], back.entries[i][j]))
        return AxiomReport::fail(subject, "matrix round trip broke an entry");
  return AxiomReport::pass(subject, id_cell(assembled));
}

void run_witness_claims(const Instance& inst,
                        std::vector<AxiomReport>& out) {
  for (const WitnessClaim& c : inst.witnesses) {
    auto set_of = [&](const std::string& n) -> const FiniteSet& {
      auto it = inst.sets.find(n);
      if (it == inst.sets.end())
        throw ValidationError("witness refers to unknown set '" + n + "'");
      return it->second;
    };
    auto span_of = [&](const std::string& n) -> const Span& {
      auto it = inst.spans.find(n);
      if (it == inst.spans.end())
        throw ValidationError("witness refers to unknown span '" + n + "'");
      return it->second;
    };
    auto candidate = [&](const FiniteSet& dom,
                         const FiniteSet& cod) -> FiniteFunction {
      if (static_cast<int>(c.table.size()) != dom.size)
        throw ValidationError("witness table length mismatch");
      for (int v : c.table)
        if (v < 0 || v >= cod.size)
          throw ValidationError("witness table entry out of range");
      return FiniteFunction(dom, cod, c.table);
    };
    try {
      if (c.check == "separable") {
        const FiniteSet& a = set_of(c.set);
        out.push_back(prefixed("claim",
                               check_separable(a, candidate(a, a))));
      } else if (c.check == "frobenius") {
        const FiniteSet& a = set_of(c.set);
        out.push_back(prefixed("claim",
                               check_frobenius(a, candidate(a, a))));
      } else if (c.check == "beck") {
        out.push_back(prefixed(
            "claim", check_beck_pullback(span_of(c.span), span_of(c.span_b))));
      } else {
        const Span& g = span_of(c.span);
        Span gg = compose_spans(opposite(g), g);
        out.push_back(prefixed(
            "claim",
            check_maps_comonadic(g, 2, candidate(g.src(), gg.apex()))));
      }
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
}

void suite_axioms(const Instance& inst, int bound,
                  std::vector<AxiomReport>& out) {
  for (int n = 0; n <= bound; ++n) {
    FiniteSet a(n);
    out.push_back(check_separable(a));
    out.push_back(check_frobenius(a));
    out.push_back(check_discrete(a));
  }
  for (int x = 0; x <= cap(bound, 3); ++x)
    for (int a = 0; a <= cap(bound, 3); ++a)
      out.push_back(check_hom_discreteness(FiniteSet(x), FiniteSet(a)));
  for (int a = 0; a <= cap(bound, 2); ++a)
    for (int b = 0; b <= cap(bound, 2); ++b)
      out.push_back(check_closure_properties(FiniteSet(a), FiniteSet(b)));
  for (int x = 0; x <= cap(bound, 3); ++x)
    for (int a = 0; a <= cap(bound, 3); ++a)
      for (const FiniteFunction& f :
           all_functions(FiniteSet(x), FiniteSet(a)))
        out.push_back(check_maps_comonadic(map_from_function(f), 2));
  for (const auto& [name, a] : inst.sets)
    out.push_back(prefixed(name, check_discrete(a)));
  for (const auto& [name, r] : inst.spans)
    if (is_map(r))
      out.push_back(prefixed(name, check_maps_comonadic(r, 2)));
  run_witness_claims(inst, out);
}

void suite_comonads(const Instance& inst, int bound,
                    std::vector<AxiomReport>& out) {
  for (int n = 0; n <= cap(bound, 3); ++n) {
    FiniteSet a(n);
    std::string subject =
        "comonad_structure A=" + std::to_string(n) + " apex<=2";
    out.push_back(
        guarded(subject, [&] { return sweep_comonad_structure(a, 2); }));
  }
  for (int n = 0; n <= cap(bound, 2); ++n) {
    FiniteSet a(n);
    std::string subject = "comonad_wedges A=" + std::to_string(n) + " apex<=2";
    out.push_back(guarded(subject, [&] { return sweep_wedges(a, 2, 2); }));
  }
  for (const auto& [name, g] : inst.spans) {
    if (g.src() != g.tgt() || g.left.table != g.right.table) continue;
    std::string subject = name + ": comonad";
    out.push_back(guarded(subject, [&, gs = g] {
      Comonad c = comonad_on(gs);
      EMObject em = em_object(c, 2);
      return AxiomReport::pass(subject, em.coalgebra, true);
    }));
  }
}

void suite_tabulation(const Instance& inst, int bound,
                      std::vector<AxiomReport>& out) {
  for (int x = 0; x <= cap(bound, 2); ++x)
    for (int a = 0; a <= cap(bound, 2); ++a) {
      FiniteSet sx(x), sa(a);
      std::string subject = "tabulation X=" + std::to_string(x) +
                            " A=" + std::to_string(a) + " apex<=2";
      out.push_back(
          guarded(subject, [&] { return sweep_tabulations(sx, sa, 2); }));
    }
  for (int x = 0; x <= cap(bound, 2); ++x)
    for (int y = 0; y <= cap(bound, 2); ++y)
      for (int z = 0; z <= cap(bound, 2); ++z)
        out.push_back(
            sweep_beck(FiniteSet(x), FiniteSet(y), FiniteSet(z)));
  for (const auto& [name, r] : inst.spans) {
    std::string subject = name + ": tabulate";
    out.push_back(guarded(subject, [&, rs = r] {
      Tabulation tb = tabulate(rs, 2);
      return AxiomReport::pass(subject, tb.omega, true);
    }));
  }
}

void suite_biequivalence(const Instance& inst, int bound,
                         std::vector<AxiomReport>& out) {
  for (int x = 0; x <= 2; ++x)
    for (int a = 0; a <= 2; ++a)
      out.push_back(
          sweep_roundtrips(FiniteSet(x), FiniteSet(a), cap(bound, 3)));
  for (int x = 1; x <= 2; ++x)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        out.push_back(sweep_pseudofunctor(FiniteSet(x), FiniteSet(a),
                                          FiniteSet(b), 2));
  for (const auto& [name, r] : inst.spans)
    out.push_back(prefixed(name, check_roundtrips(r, functor_f(r))));
}

void suite_direct_sums(const Instance& inst, int bound,
                       std::vector<AxiomReport>& out) {
  out.push_back(zero_object_check(cap(bound, 5)));
  for (int x = 0; x <= bound; ++x)
    out.push_back(codiagonal_is_map(FiniteSet(x)));
  for (int x = 0; x <= cap(bound, 3); ++x)
    for (int y = 0; y <= cap(bound, 3); ++y)
      out.push_back(canonical_sum_to_product(FiniteSet(x), FiniteSet(y)));
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      out.push_back(
          check_lextensive_base(FiniteSet(x), FiniteSet(y), FiniteSet(2), 2));
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) {
      FiniteSet sx(x), sy(y), sz(2);
      FiniteSet sum(x + y);
      out.push_back(direct_sum_hom_equivalence(
          sx, sy, sz, all_spans_up_to(sum, sz, 2)));
    }
  for (const auto& [name, m] : inst.matrices)
    out.push_back(matrix_roundtrip_report(name, m));
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Instance& inst,
                      int bound) {
  SuiteReport report;
  report.suite = name;
  report.bound = bound;
  if (name == "axioms" || name == "all") suite_axioms(inst, bound, report.results);
  if (name == "comonads" || name == "all")
    suite_comonads(inst, bound, report.results);
  if (name == "tabulation" || name == "all")
    suite_tabulation(inst, bound, report.results);
  if (name == "biequivalence" || name == "all")
    suite_biequivalence(inst, bound, report.results);
  if (name == "direct-sums" || name == "all")
    suite_direct_sums(inst, bound, report.results);
  if (report.results.empty() && name != "all")
    throw ValidationError("unknown suite '" + name + "'");
  std::sort(report.results.begin(), report.results.end(),
            [](const AxiomReport& a, const AxiomReport& b) {
              return a.subject < b.subject;
            });
  return report;
}

}  // namespace spancat
