// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure. Usage: acceptance <spancheck binary> <data dir>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "spancat/axioms.hpp"
#include "spancat/direct_sums.hpp"
#include "spancat/local.hpp"
#include "spancat/span_equiv.hpp"

using namespace spancat;

namespace {

int failures = 0;

void criterion(int n, const char* desc, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("criterion %2d: %s - %s%s\n", n, ok ? "pass" : "FAIL", desc,
              note.c_str());
  if (!ok) ++failures;
}

bool limits_against_oracles() {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb)
      for (int nc = 1; nc <= 3; ++nc) {
        FiniteSet a(na), b(nb), c(nc);
        for (const FiniteFunction& f : all_functions(a, c))
          for (const FiniteFunction& g : all_functions(b, c)) {
            Pullback pb = pullback(f, g);
            size_t expected = 0;
            for (int i = 0; i < na; ++i)
              for (int j = 0; j < nb; ++j)
                if (f(i) == g(j)) {
                  if (pb.pairs[expected] != std::make_pair(i, j))
                    return false;
                  ++expected;
                }
            if (pb.pairs.size() != expected) return false;
            if (!(compose_fn(pb.into_left, f) ==
                  compose_fn(pb.into_right, g)))
              return false;
          }
        if (product(a, b).set.size != na * nb) return false;
        if (coproduct(a, b).set.size != na + nb) return false;
      }
  return true;
}

bool bicategory_laws() {
  FiniteSet x(2);
  auto spans = all_spans_up_to(x, x, 2);
  for (const Span& r : spans) {
    if (!left_unitor(r).cell.is_iso()) return false;
    if (!right_unitor(r).cell.is_iso()) return false;
    for (const Span& s : spans)
      for (const Span& t : spans) {
        CanonicalIso a = associator(r, s, t);
        if (!a.cell.is_iso()) return false;
        if (!(a.cell.source == compose_spans(compose_spans(r, s), t)))
          return false;
        if (!(a.cell.target == compose_spans(r, compose_spans(s, t))))
          return false;
      }
  }
  // interchange
  for (const Span& r1 : spans)
    for (const Span& r2 : spans)
      for (const SpanMorphism& alpha : all_two_cells(r1, r2))
        for (const Span& s1 : spans)
          for (const Span& s2 : spans)
            for (const SpanMorphism& beta : all_two_cells(s1, s2)) {
              SpanMorphism lhs = horizontal_compose(alpha, beta);
              SpanMorphism rhs = vertical_compose(
                  whisker(alpha, s1), whisker_left(r2, beta));
              if (!(lhs == rhs)) return false;
            }
  return true;
}

bool has_right_adjoint(const Span& r, int candidate_apex_bound) {
  FiniteSet x = r.src(), a = r.tgt();
  for (const Span& s : all_spans_up_to(a, x, candidate_apex_bound))
    for (const SpanMorphism& unit :
         all_two_cells(id_span(x), compose_spans(r, s)))
      for (const SpanMorphism& counit :
           all_two_cells(compose_spans(s, r), id_span(a))) {
        SpanMorphism tri_r = vertical_compose(
            left_unitor(r).inverted().cell,
            vertical_compose(
                whisker(unit, r),
                vertical_compose(associator(r, s, r).cell,
                                 vertical_compose(whisker_left(r, counit),
                                                  right_unitor(r).cell))));
        if (!(tri_r == id_cell(r))) continue;
        SpanMorphism tri_s = vertical_compose(
            right_unitor(s).inverted().cell,
            vertical_compose(
                whisker_left(s, unit),
                vertical_compose(associator(s, r, s).inverted().cell,
                                 vertical_compose(whisker(counit, s),
                                                  left_unitor(s).cell))));
        if (tri_s == id_cell(s)) return true;
      }
  return false;
}

bool maps_are_left_adjoints() {
  FiniteSet x(2), a(2);
  for (const Span& r : all_spans_up_to(x, a, 3))
    if (is_map(r) != has_right_adjoint(r, 4)) return false;
  for (const FiniteFunction& f : all_functions(FiniteSet(3), a))
    make_adjunction(map_from_function(f));
  return true;
}

bool axiom_checks_with_fault_injection() {
  for (int n = 0; n <= 5; ++n)
    if (!check_discrete(FiniteSet(n)).holds) return false;
  for (int nx = 0; nx <= 3; ++nx)
    for (const FiniteFunction& f :
         all_functions(FiniteSet(nx), FiniteSet(2)))
      if (!check_maps_comonadic(map_from_function(f), 2).holds) return false;
  FiniteSet a(3);
  AxiomReport good = check_separable(a);
  std::vector<int> tw = good.witness->map.table;
  std::swap(tw[0], tw[1]);
  AxiomReport bad = check_separable(
      a, FiniteFunction(good.witness->map.dom, good.witness->map.cod, tw));
  return good.holds && !bad.holds && bad.counterexample.has_value();
}

bool separability_formulations_agree() {
  for (int n = 0; n <= 4; ++n) {
    FiniteSet a(n);
    bool i = separable_unit_invertible(a);
    if (i != separable_maps_self_product(a)) return false;
    if (i != separable_identity_self_product(a)) return false;
    if (i != separable_identity_subterminal(a)) return false;
    if (i != separable_copointed_products(a)) return false;
    if (!i) return false;
  }
  return true;
}

bool comonad_structure() {
  FiniteSet a(2);
  for (const Span& g : all_spans_up_to(a, a, 4)) {
    bool equal = g.left.table == g.right.table;
    if (find_copoint(g).has_value() != equal) return false;
    if (equal) comonad_on(g);  // verifies triangles, coassoc, uniqueness
  }
  FiniteFunction leg_g(FiniteSet(3), a, {0, 0, 1});
  FiniteFunction leg_h(FiniteSet(2), a, {0, 1});
  Span g(leg_g, leg_g), h(leg_h, leg_h);
  if (!check_wedge_of_copointed(g, h, 4).holds) return false;
  return find_iso(compose_spans(h, g), local_product(g, h).product)
      .has_value();
}

bool tabulation_constructions() {
  FiniteSet x(2), a(2);
  for (const Span& r : all_spans_up_to(x, a, 4)) {
    Tabulation tb = tabulate(r, 2);
    SpanMorphism gamma = tb.omega;  // v -> u R, couniversal by construction
    if (!(gamma.target == compose_spans(tb.u, r))) return false;
    if (!find_iso(compose_spans(opposite(tb.u), tb.v), r).has_value())
      return false;
    Comonad gr = g_of_r(r);  // verifies the projections recover R
    EMObject em = em_object(gr, 2);
    SpanMorphism m = coalgebra_mate(em.projection, em.coalgebra, gr.carrier);
    if (!m.is_iso()) return false;
  }
  return true;
}

bool beck_for_all_cospans() {
  for (int nx = 0; nx <= 3; ++nx)
    for (int ny = 0; ny <= 3; ++ny)
      for (int nz = 1; nz <= 3; ++nz)
        for (const FiniteFunction& f :
             all_functions(FiniteSet(nx), FiniteSet(nz)))
          for (const FiniteFunction& g :
               all_functions(FiniteSet(ny), FiniteSet(nz)))
            if (!check_beck_pullback(map_from_function(f),
                                     map_from_function(g))
                     .holds)
              return false;
  return true;
}

bool biequivalence_roundtrips() {
  FiniteSet x(2), a(2);
  for (const Span& r : all_spans_up_to(x, a, 4))
    if (!check_roundtrips(r, functor_f(r)).holds) return false;
  for (int k1 = 0; k1 <= 2; ++k1)
    for (const FiniteFunction& y1 : all_functions(FiniteSet(k1), x))
      for (const FiniteFunction& b1 : all_functions(FiniteSet(k1), a))
        for (int k2 = 0; k2 <= 2; ++k2)
          for (const FiniteFunction& y2 : all_functions(FiniteSet(k2), a))
            for (const FiniteFunction& b2 : all_functions(FiniteSet(k2), a))
              if (!check_pseudofunctoriality(MapSpan(y1, b1),
                                             MapSpan(y2, b2))
                       .holds)
                return false;
  return true;
}

bool direct_sum_calculus() {
  if (!zero_object_check(5).holds) return false;
  for (int n = 0; n <= 3; ++n)
    if (!codiagonal_is_map(FiniteSet(n)).holds) return false;
  for (int nx = 0; nx <= 3; ++nx)
    for (int ny = 0; ny <= 3; ++ny)
      if (!canonical_sum_to_product(FiniteSet(nx), FiniteSet(ny)).holds)
        return false;
  std::vector<FiniteSet> rows{FiniteSet(2), FiniteSet(1)};
  std::vector<FiniteSet> cols{FiniteSet(1), FiniteSet(2)};
  FiniteSet three(3);
  for (const Span& r : all_spans_up_to(three, three, 3)) {
    SpanMatrix m = matrix_of_span(r, rows, cols);
    if (!find_iso(span_of_matrix(m), r).has_value()) return false;
  }
  SpanMatrix a = matrix_of_span(
      Span(FiniteFunction(FiniteSet(3), three, {0, 1, 2}),
           FiniteFunction(FiniteSet(3), three, {2, 2, 0})),
      rows, cols);
  SpanMatrix b = matrix_of_span(
      Span(FiniteFunction(FiniteSet(2), three, {0, 2}),
           FiniteFunction(FiniteSet(2), three, {1, 1})),
      cols, rows);
  SpanMatrix prod = matrix_compose(a, b);
  return find_iso(span_of_matrix(prod),
                  compose_spans(span_of_matrix(a), span_of_matrix(b)))
      .has_value();
}

bool hom_discreteness() {
  for (int nx = 0; nx <= 3; ++nx)
    for (int na = 0; na <= 3; ++na)
      if (!check_hom_discreteness(FiniteSet(nx), FiniteSet(na)).holds)
        return false;
  return true;
}

std::string cli_binary, data_dir;

int run_cli(const std::string& args) {
  std::string cmd = cli_binary + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

bool cli_contract() {
  if (run_cli("check " + data_dir + "/clean.json --suite all --bound 3") != 0)
    return false;
  if (run_cli("check " + data_dir + "/corrupted.json --suite axioms") != 1)
    return false;
  if (run_cli("check " + data_dir + "/malformed.json") != 2) return false;
  if (run_cli("compose " + data_dir + "/clean.json R") != 0) return false;
  if (run_cli("tabulate " + data_dir + "/clean.json R") != 0) return false;
  if (run_cli("em " + data_dir + "/clean.json G") != 0) return false;
  if (run_cli("em " + data_dir + "/clean.json R") != 1) return false;
  if (run_cli("matrix " + data_dir + "/clean.json M") != 0) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  setbuf(stdout, nullptr);
  cli_binary = argc > 1 ? argv[1] : "./spancheck";
  data_dir = argc > 2 ? argv[2] : "data";

  criterion(1, "finite limits agree with enumeration oracles",
            limits_against_oracles);
  criterion(2, "bicategory coherence and interchange", bicategory_laws);
  criterion(3, "maps coincide with left adjoints", maps_are_left_adjoints);
  criterion(4, "axiom checkers pass and reject injected faults",
            axiom_checks_with_fault_injection);
  criterion(5, "five separability formulations coincide",
            separability_formulations_agree);
  criterion(6, "copointed endospans carry unique comonad structure",
            comonad_structure);
  criterion(7, "tabulations and induced comonads reconstruct spans",
            tabulation_constructions);
  criterion(8, "beck condition holds at every pullback of maps",
            beck_for_all_cospans);
  criterion(9, "span reading is a biequivalence on the sample range",
            biequivalence_roundtrips);
  criterion(10, "matrix calculus matches span composition",
            direct_sum_calculus);
  criterion(11, "hom-categories of maps are discrete", hom_discreteness);
  criterion(12, "command line contract: exit codes 0, 1 and 2", cli_contract);

  if (failures > 0) {
    std::printf("%d criteria failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
