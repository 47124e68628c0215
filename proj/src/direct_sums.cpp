#include "spancat/direct_sums.hpp"

#include "spancat/maps.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace spancat {

namespace {

Span empty_span(const FiniteSet& x, const FiniteSet& a) {
  FiniteSet none(0);
  return Span(FiniteFunction(none, x, {}), FiniteFunction(none, a, {}));
}

// Copair of spans with a common target over the disjoint union of sources.
Span span_copair(const Span& r, const Span& s) {
  CoproductSet cap = coproduct(r.apex(), s.apex());
  CoproductSet csrc = coproduct(r.src(), s.src());
  FiniteFunction left =
      copair_fn(compose_fn(r.left, csrc.inj1), compose_fn(s.left, csrc.inj2));
  return Span(left, copair_fn(r.right, s.right));
}

// Union of parallel spans: disjoint union of apexes, legs copaired.
Span span_union(const Span& r, const Span& s) {
  if (r.src() != s.src() || r.tgt() != s.tgt())
    throw std::invalid_argument("span_union: boundary mismatch");
  return Span(copair_fn(r.left, s.left), copair_fn(r.right, s.right));
}

std::vector<int> block_offsets(const std::vector<FiniteSet>& blocks) {
  std::vector<int> off(blocks.size() + 1, 0);
  for (size_t i = 0; i < blocks.size(); ++i)
    off[i + 1] = off[i] + blocks[i].size;
  return off;
}

}  // namespace

SpanMatrix::SpanMatrix(std::vector<FiniteSet> rows, std::vector<FiniteSet> cols,
                       std::vector<std::vector<Span>> entries_)
    : row_objects(std::move(rows)),
      col_objects(std::move(cols)),
      entries(std::move(entries_)) {
  if (entries.size() != row_objects.size())
    throw std::invalid_argument("SpanMatrix: row count mismatch");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != col_objects.size())
      throw std::invalid_argument("SpanMatrix: column count mismatch");
    for (size_t j = 0; j < entries[i].size(); ++j)
      if (entries[i][j].src() != row_objects[i] ||
          entries[i][j].tgt() != col_objects[j])
        throw std::invalid_argument("SpanMatrix: entry boundary mismatch");
  }
}

AxiomReport zero_object_check(int max_size) {
  std::string subject = "zero_object max=" + std::to_string(max_size);
  FiniteSet zero(0);
  for (int n = 0; n <= max_size; ++n) {
    FiniteSet z(n);
    if (all_spans_up_to(zero, z, 3).size() != 1 ||
        all_spans_up_to(z, zero, 3).size() != 1)
      return AxiomReport::fail(subject,
                               "hom through the empty set is not a singleton "
                               "at size " + std::to_string(n),
                               true);
    // composites through 0 are the empty span
    Span through = compose_spans(empty_span(z, zero), empty_span(zero, z));
    if (through.apex().size != 0)
      return AxiomReport::fail(subject, "composite through 0 is not empty",
                               true);
  }
  return AxiomReport::pass(std::move(subject), id_cell(id_span(zero)), true);
}

std::pair<Span, Span> injection_spans(const FiniteSet& x, const FiniteSet& y) {
  CoproductSet c = coproduct(x, y);
  return {map_from_function(c.inj1), map_from_function(c.inj2)};
}

AxiomReport codiagonal_is_map(const FiniteSet& x) {
  std::string subject = "codiagonal X=" + std::to_string(x.size);
  FiniteFunction fold = copair_fn(identity_fn(x), identity_fn(x));
  Span direct = map_from_function(fold);
  Span derived = span_copair(id_span(x), id_span(x));
  if (!find_iso(direct, derived))
    return AxiomReport::fail(subject,
                             "copair of identities differs from the fold");
  if (!is_map(direct))
    return AxiomReport::fail(subject, "codiagonal is not a map");
  auto [i1, i2] = injection_spans(x, x);
  auto c1 = find_iso(compose_spans(i1, direct), id_span(x));
  auto c2 = find_iso(compose_spans(i2, direct), id_span(x));
  if (!c1 || !c2)
    return AxiomReport::fail(subject,
                             "composite with an injection is not the identity");
  return AxiomReport::pass(std::move(subject), c1->cell);
}

AxiomReport direct_sum_hom_equivalence(const FiniteSet& x, const FiniteSet& y,
                                       const FiniteSet& z,
                                       const std::vector<Span>& samples) {
  std::string subject = "direct_sum_hom X=" + std::to_string(x.size) +
                        " Y=" + std::to_string(y.size) +
                        " Z=" + std::to_string(z.size);
  CoproductSet c = coproduct(x, y);
  auto [i1, i2] = injection_spans(x, y);
  std::optional<SpanMorphism> witness = id_cell(id_span(c.set));
  for (const Span& r : samples) {
    if (r.src() != c.set || r.tgt() != z)
      throw std::invalid_argument("direct_sum_hom_equivalence: bad sample");
    // coproduct direction: split by precomposition with the injections
    Span r1 = compose_spans(i1, r);
    Span r2 = compose_spans(i2, r);
    auto back = find_iso(span_copair(r1, r2), r);
    if (!back)
      return AxiomReport::fail(subject, "splitting by injections does not "
                                        "recombine to the sample");
    // product direction: split the opposite by the opposite injections
    Span s = opposite(r);
    Span s1 = compose_spans(s, opposite(i1));
    Span s2 = compose_spans(s, opposite(i2));
    Span paired = opposite(span_copair(opposite(s1), opposite(s2)));
    if (!find_iso(paired, s))
      return AxiomReport::fail(subject, "pairing by projections does not "
                                        "recombine to the sample");
    witness = back->cell;
  }
  return AxiomReport::pass(std::move(subject), *witness);
}

SpanMatrix matrix_of_span(const Span& r, std::vector<FiniteSet> rows,
                          std::vector<FiniteSet> cols) {
  std::vector<int> ro = block_offsets(rows);
  std::vector<int> co = block_offsets(cols);
  if (ro.back() != r.src().size || co.back() != r.tgt().size)
    throw std::invalid_argument("matrix_of_span: block structure mismatch");
  std::vector<std::vector<Span>> entries;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<Span> row;
    for (size_t j = 0; j < cols.size(); ++j) {
      std::vector<int> lt, rt;
      for (int e = 0; e < r.apex().size; ++e) {
        int l = r.left(e);
        int rr = r.right(e);
        if (l >= ro[i] && l < ro[i + 1] && rr >= co[j] && rr < co[j + 1]) {
          lt.push_back(l - ro[i]);
          rt.push_back(rr - co[j]);
        }
      }
      FiniteSet apex(static_cast<int>(lt.size()));
      row.emplace_back(FiniteFunction(apex, rows[i], std::move(lt)),
                       FiniteFunction(apex, cols[j], std::move(rt)));
    }
    entries.push_back(std::move(row));
  }
  return SpanMatrix(std::move(rows), std::move(cols), std::move(entries));
}

Span span_of_matrix(const SpanMatrix& m) {
  std::vector<int> ro = block_offsets(m.row_objects);
  std::vector<int> co = block_offsets(m.col_objects);
  FiniteSet src(ro.back());
  FiniteSet tgt(co.back());
  std::vector<int> lt, rt;
  for (size_t i = 0; i < m.entries.size(); ++i)
    for (size_t j = 0; j < m.entries[i].size(); ++j) {
      const Span& e = m.entries[i][j];
      for (int k = 0; k < e.apex().size; ++k) {
        lt.push_back(e.left(k) + ro[i]);
        rt.push_back(e.right(k) + co[j]);
      }
    }
  FiniteSet apex(static_cast<int>(lt.size()));
  return Span(FiniteFunction(apex, src, std::move(lt)),
              FiniteFunction(apex, tgt, std::move(rt)));
}

SpanMatrix matrix_compose(const SpanMatrix& m, const SpanMatrix& n) {
  if (m.col_objects.size() != n.row_objects.size())
    throw std::invalid_argument("matrix_compose: dimension mismatch");
  for (size_t j = 0; j < m.col_objects.size(); ++j)
    if (m.col_objects[j] != n.row_objects[j])
      throw std::invalid_argument("matrix_compose: middle objects differ");
  std::vector<std::vector<Span>> entries;
  for (size_t i = 0; i < m.row_objects.size(); ++i) {
    std::vector<Span> row;
    for (size_t k = 0; k < n.col_objects.size(); ++k) {
      Span acc = empty_span(m.row_objects[i], n.col_objects[k]);
      for (size_t j = 0; j < m.col_objects.size(); ++j)
        acc = span_union(acc, compose_spans(m.entries[i][j], n.entries[j][k]));
      row.push_back(std::move(acc));
    }
    entries.push_back(std::move(row));
  }
  SpanMatrix result(m.row_objects, n.col_objects, std::move(entries));
  // agree with composition of the assembled spans, entry by entry
  SpanMatrix direct =
      matrix_of_span(compose_spans(span_of_matrix(m), span_of_matrix(n)),
                     m.row_objects, n.col_objects);
  for (size_t i = 0; i < result.entries.size(); ++i)
    for (size_t k = 0; k < result.entries[i].size(); ++k)
      if (!find_iso(result.entries[i][k], direct.entries[i][k]))
        throw std::logic_error("matrix_compose: disagrees with span "
                               "composition");
  return result;
}

AxiomReport canonical_sum_to_product(const FiniteSet& x, const FiniteSet& y) {
  std::string subject = "sum_to_product X=" + std::to_string(x.size) +
                        " Y=" + std::to_string(y.size);
  std::vector<FiniteSet> blocks{x, y};
  SpanMatrix m(blocks, blocks,
               {{id_span(x), empty_span(x, y)},
                {empty_span(y, x), id_span(y)}});
  Span arrow = span_of_matrix(m);
  Span inv = opposite(arrow);
  FiniteSet total(x.size + y.size);
  auto unit = find_iso(id_span(total), compose_spans(arrow, inv));
  auto counit = find_iso(compose_spans(inv, arrow), id_span(total));
  if (!unit || !counit)
    return AxiomReport::fail(subject, "canonical arrow is not an equivalence");
  return AxiomReport::pass(std::move(subject), unit->cell);
}

AxiomReport check_lextensive_base(const FiniteSet& x, const FiniteSet& y,
                                  const FiniteSet& z, int sample_bound) {
  std::string subject = "lextensive X=" + std::to_string(x.size) +
                        " Y=" + std::to_string(y.size) +
                        " Z=" + std::to_string(z.size);
  CoproductSet c = coproduct(x, y);
  ProductSet zx = product(z, x);
  ProductSet zy = product(z, y);
  CoproductSet lhs = coproduct(zx.set, zy.set);
  ProductSet rhs = product(z, c.set);
  // distributivity: Z x X + Z x Y -> Z x (X + Y)
  std::vector<int> table(static_cast<size_t>(lhs.set.size));
  for (int e = 0; e < zx.set.size; ++e)
    table[static_cast<size_t>(lhs.inj1(e))] =
        pair_encode(zx.proj1(e), c.inj1(zx.proj2(e)), c.set.size);
  for (int e = 0; e < zy.set.size; ++e)
    table[static_cast<size_t>(lhs.inj2(e))] =
        pair_encode(zy.proj1(e), c.inj2(zy.proj2(e)), c.set.size);
  if (!is_bijection(FiniteFunction(lhs.set, rhs.set, std::move(table))))
    return AxiomReport::fail(subject, "distributivity is not a bijection",
                             true);
  // stability: coproduct decompositions pull back along any function
  for (int n = 0; n <= sample_bound; ++n) {
    FiniteSet w(n);
    for (const FiniteFunction& f : all_functions(w, c.set)) {
      Pullback p1 = pullback(f, c.inj1);
      Pullback p2 = pullback(f, c.inj2);
      if (p1.apex.size + p2.apex.size != n ||
          !is_injective(p1.into_left) || !is_injective(p2.into_left))
        return AxiomReport::fail(subject,
                                 "coproduct decomposition is not stable under "
                                 "pullback",
                                 true);
    }
  }
  return AxiomReport::pass(std::move(subject), id_cell(id_span(c.set)), true);
}

}  // namespace spancat
