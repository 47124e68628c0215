#include "spancat/axioms.hpp"

#include "spancat/local.hpp"

#include <stdexcept>
#include <string>

namespace spancat {

namespace {

SpanMorphism vert(const SpanMorphism& a, const SpanMorphism& b) {
  return vertical_compose(a, b);
}

Span diagonal_map(const FiniteSet& a) {
  return map_from_function(pair_fn(identity_fn(a), identity_fn(a)));
}

// Validates a candidate witness table against the boundary of the 2-cell
// the checker would have computed itself.
std::optional<std::string> cell_defect(const Span& src, const Span& tgt,
                                       const FiniteFunction& f) {
  if (f.dom != src.apex() || f.cod != tgt.apex())
    return "candidate has the wrong boundary";
  for (int e = 0; e < src.apex().size; ++e) {
    if (tgt.left(f(e)) != src.left(e) || tgt.right(f(e)) != src.right(e))
      return "candidate does not commute with the legs at apex element " +
             std::to_string(e);
  }
  if (!is_bijection(f)) return "candidate is not invertible";
  return std::nullopt;
}

AxiomReport report_on_witness(std::string subject, const SpanMorphism& computed,
                              const std::optional<FiniteFunction>& candidate,
                              bool bounded = false) {
  if (candidate) {
    auto defect = cell_defect(computed.source, computed.target, *candidate);
    if (defect) return AxiomReport::fail(subject, *defect, bounded);
    if (candidate->table != computed.map.table)
      return AxiomReport::fail(
          subject, "candidate differs from the canonical witness", bounded);
  }
  if (!computed.is_iso())
    return AxiomReport::fail(subject, "canonical 2-cell is not invertible",
                             bounded);
  return AxiomReport::pass(std::move(subject), computed, bounded);
}

}  // namespace

AxiomReport check_separable(const FiniteSet& a,
                            const std::optional<FiniteFunction>& candidate) {
  std::string subject = "separable A=" + std::to_string(a.size);
  Adjunction adj = make_adjunction(diagonal_map(a));
  return report_on_witness(std::move(subject), adj.unit, candidate);
}

AxiomReport check_frobenius(const FiniteSet& a,
                            const std::optional<FiniteFunction>& candidate) {
  std::string subject = "frobenius A=" + std::to_string(a.size);
  Span d = diagonal_map(a);
  FiniteFunction dfn = function_from_map(d);
  Span d_one = map_from_function(product_fn(dfn, identity_fn(a)));
  Span one_d = map_from_function(product_fn(identity_fn(a), dfn));
  // d then (1 (x) d) and d then (d (x) 1) both compute the triple diagonal
  GSquare sq = square_of_maps(d, one_d, d, d_one);
  SpanMorphism m = mate(sq);
  return report_on_witness(std::move(subject), m, candidate);
}

AxiomReport check_beck_pullback(const Span& a, const Span& b,
                                const std::optional<FiniteFunction>& candidate) {
  if (!is_map(a) || !is_map(b))
    throw std::invalid_argument("check_beck_pullback: arguments must be maps");
  if (a.tgt() != b.tgt())
    throw std::invalid_argument("check_beck_pullback: codomain mismatch");
  std::string subject = "beck_pullback a=" + std::to_string(a.apex().size) +
                        "->" + std::to_string(a.tgt().size) +
                        " b=" + std::to_string(b.apex().size) + "->" +
                        std::to_string(b.tgt().size);
  FiniteFunction fa = function_from_map(a);
  FiniteFunction fb = function_from_map(b);
  Pullback pb = pullback(fa, fb);
  Span p = map_from_function(pb.into_left);
  Span r = map_from_function(pb.into_right);
  GSquare sq = square_of_maps(r, a, p, b);
  SpanMorphism m = mate(sq);  // p r* -> a* b
  return report_on_witness(std::move(subject), m, candidate);
}

AxiomReport check_maps_comonadic(const Span& g, int bound,
                                 const std::optional<FiniteFunction>& candidate) {
  if (!is_map(g))
    throw std::invalid_argument("check_maps_comonadic: not a map");
  std::string subject = "maps_comonadic g=" + std::to_string(g.apex().size) +
                        "->" + std::to_string(g.tgt().size);
  Span gg = compose_spans(opposite(g), g);
  Comonad c = comonad_on(gg);
  EMObject em = em_object(c, 2);

  // the coalgebra on g induced by the unit of g -| g*
  Adjunction adj = make_adjunction(g);
  SpanMorphism gamma = left_unitor(g).inverted().cell;
  gamma = vert(gamma, whisker(adj.unit, g));
  gamma = vert(gamma, associator(g, adj.right, g).cell);

  // read the comparison off the second pullback coordinate of gamma
  Pullback pb = composition_pullback(g, gg);
  std::vector<int> table(static_cast<size_t>(g.src().size));
  FiniteFunction x_inv = inverse(g.left);
  for (int x = 0; x < g.src().size; ++x)
    table[static_cast<size_t>(x)] =
        pb.pairs[static_cast<size_t>(gamma.map(x_inv(x)))].second;
  FiniteFunction comparison(g.src(), em.object, std::move(table));

  const FiniteFunction& use = candidate ? *candidate : comparison;
  if (use.dom != g.src() || use.cod != em.object)
    return AxiomReport::fail(subject, "candidate has the wrong boundary");
  FiniteFunction leg = function_from_map(em.projection);
  FiniteFunction fg = function_from_map(g);
  for (int x = 0; x < g.src().size; ++x)
    if (leg(use(x)) != fg(x))
      return AxiomReport::fail(
          subject, "comparison does not commute with the projection at " +
                       std::to_string(x));
  if (use.table != comparison.table)
    return AxiomReport::fail(subject,
                             "comparison is not the coalgebra-induced one");
  if (!is_bijection(comparison))
    return AxiomReport::fail(subject, "comparison is not invertible");

  // bounded sweep: g reflects invertibility of 2-cells
  FiniteSet w(1);
  int apex_cap = bound < 3 ? bound : 3;
  auto tests = all_spans_up_to(w, g.src(), apex_cap);
  for (const Span& r1 : tests)
    for (const Span& r2 : tests)
      for (const SpanMorphism& phi : all_two_cells(r1, r2))
        if (whisker(phi, g).is_iso() != phi.is_iso())
          return AxiomReport::fail(
              subject, "a non-invertible 2-cell becomes invertible after g",
              true);

  // the graph of the comparison composed with the projection recovers g
  auto iso = find_iso(
      compose_spans(map_from_function(comparison), em.projection), g);
  if (!iso)
    return AxiomReport::fail(subject,
                             "comparison does not factor g through the "
                             "Eilenberg-Moore object",
                             true);
  return AxiomReport::pass(std::move(subject), iso->cell, true);
}

AxiomReport check_discrete(const FiniteSet& a) {
  std::string subject = "discrete A=" + std::to_string(a.size);
  AxiomReport s = check_separable(a);
  AxiomReport f = check_frobenius(a);
  if (!s.holds) return AxiomReport::fail(subject, *s.counterexample);
  if (!f.holds) return AxiomReport::fail(subject, *f.counterexample);
  return AxiomReport::pass(std::move(subject), *s.witness);
}

AxiomReport check_hom_discreteness(const FiniteSet& x, const FiniteSet& a) {
  std::string subject =
      "hom_discrete X=" + std::to_string(x.size) + " A=" + std::to_string(a.size);
  for (const FiniteFunction& f1 : all_functions(x, a)) {
    for (const FiniteFunction& f2 : all_functions(x, a)) {
      auto cells = all_two_cells(map_from_function(f1), map_from_function(f2));
      if (cells.size() > 1)
        return AxiomReport::fail(subject, "two distinct 2-cells between maps");
      if (cells.size() == 1 && !cells.front().is_iso())
        return AxiomReport::fail(subject, "a 2-cell between maps is not "
                                          "invertible");
    }
  }
  return AxiomReport::pass(std::move(subject), id_cell(id_span(x)));
}

AxiomReport check_closure_properties(const FiniteSet& a, const FiniteSet& b) {
  std::string subject = "closure A=" + std::to_string(a.size) +
                        " B=" + std::to_string(b.size);
  FiniteSet ab = product(a, b).set;
  AxiomReport s = check_separable(ab);
  AxiomReport f = check_frobenius(ab);
  if (!s.holds) return AxiomReport::fail(subject, *s.counterexample);
  if (!f.holds) return AxiomReport::fail(subject, *f.counterexample);

  // the product unit witness is the tensor of the factor witnesses
  Adjunction adj_a = make_adjunction(diagonal_map(a));
  Adjunction adj_b = make_adjunction(diagonal_map(b));
  Adjunction adj_ab = make_adjunction(diagonal_map(ab));
  SpanMorphism tens = tensor_cells(adj_a.unit, adj_b.unit);
  SpanMorphism lhs = tens;
  if (!(lhs.source == id_span(ab))) {
    auto fix = find_iso(id_span(ab), lhs.source);
    if (!fix) return AxiomReport::fail(subject, "tensor of units has an "
                                                "unexpected source");
    lhs = vert(fix->cell, lhs);
  }
  auto glue = find_iso(lhs.target, adj_ab.unit.target);
  if (!glue)
    return AxiomReport::fail(subject,
                             "tensor of unit targets not isomorphic to the "
                             "product unit target");
  lhs = vert(lhs, glue->cell);
  if (!(lhs == adj_ab.unit))
    return AxiomReport::fail(subject,
                             "tensor of unit witnesses differs from the "
                             "product unit witness");
  return AxiomReport::pass(std::move(subject), adj_ab.unit);
}

bool separable_unit_invertible(const FiniteSet& a) {
  return make_adjunction(diagonal_map(a)).unit.is_iso();
}

bool separable_maps_self_product(const FiniteSet& a, int bound) {
  for (int n = 0; n <= bound; ++n) {
    FiniteSet x(n);
    for (const FiniteFunction& f : all_functions(x, a))
      if (!is_subterminal(map_from_function(f))) return false;
  }
  return true;
}

bool separable_identity_self_product(const FiniteSet& a) {
  return is_subterminal(id_span(a));
}

bool separable_identity_subterminal(const FiniteSet& a, int bound) {
  Span one = id_span(a);
  SpanMorphism m = to_local_terminal(one);
  for (const Span& t : all_spans_up_to(a, a, bound)) {
    auto cells = all_two_cells(t, one);
    for (const SpanMorphism& u : cells)
      for (const SpanMorphism& v : cells)
        if (vert(u, m) == vert(v, m) && !(u == v)) return false;
  }
  return true;
}

bool separable_copointed_products(const FiniteSet& a, int bound) {
  Span one = id_span(a);
  for (int k = 0; k <= bound; ++k) {
    FiniteSet s(k);
    for (const FiniteFunction& leg : all_functions(s, a)) {
      Span g(leg, leg);
      for (const Span& t : all_spans_up_to(a, a, bound)) {
        long long into_g = count_two_cells(t, g);
        long long into_one = count_two_cells(t, one);
        // the pairing gamma -> (gamma, eps gamma) must be a bijection
        if (into_g * into_one != into_g) return false;
        if (into_g > 0 && into_one != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace spancat
