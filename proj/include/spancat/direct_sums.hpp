#pragma once

#include <utility>
#include <vector>

#include "spancat/report.hpp"
#include "spancat/span.hpp"

namespace spancat {

/// A block matrix of spans: entry (i, j) runs from row object i to column
/// object j.
struct SpanMatrix {
  std::vector<FiniteSet> row_objects;
  std::vector<FiniteSet> col_objects;
  std::vector<std::vector<Span>> entries;

  SpanMatrix() = default;
  SpanMatrix(std::vector<FiniteSet> rows, std::vector<FiniteSet> cols,
             std::vector<std::vector<Span>> entries_);
};

/// The empty set is initial, terminal and strict: hom(0, Z) and hom(Z, 0)
/// are singletons up to iso for |Z| <= max_size.
AxiomReport zero_object_check(int max_size = 5);

/// Graphs of the coproduct injections; both are maps.
std::pair<Span, Span> injection_spans(const FiniteSet& x, const FiniteSet& y);

/// The codiagonal X+X -> X is a map: built directly as the graph of the
/// fold and re-derived as the copair of identity spans; its composites
/// with the injections are identities.
AxiomReport codiagonal_is_map(const FiniteSet& x);

/// Splitting spans out of X+Y by the injections and recombining recovers
/// the span; dually for spans into X+Y via the opposite injections.
AxiomReport direct_sum_hom_equivalence(const FiniteSet& x, const FiniteSet& y,
                                       const FiniteSet& z,
                                       const std::vector<Span>& samples);

/// Decomposes a span over declared block structures into a matrix.
SpanMatrix matrix_of_span(const Span& r, std::vector<FiniteSet> rows,
                          std::vector<FiniteSet> cols);

/// Reassembles a span from a matrix; inverse of matrix_of_span up to the
/// block reordering bijection.
Span span_of_matrix(const SpanMatrix& m);

/// Matrix product with coproducts of composite apexes as entries; checked
/// against composition of the assembled spans.
SpanMatrix matrix_compose(const SpanMatrix& m, const SpanMatrix& n);

/// The canonical arrow from X+Y to the product of X and Y (also realized
/// by the disjoint union) is an equivalence, witnessed by a pseudo-inverse
/// with invertible unit and counit.
AxiomReport canonical_sum_to_product(const FiniteSet& x, const FiniteSet& y);

/// Observable lextensivity of the base: distributivity is a bijection and
/// coproduct decompositions pull back stably along all functions from sets
/// of size <= sample_bound.
AxiomReport check_lextensive_base(const FiniteSet& x, const FiniteSet& y,
                                  const FiniteSet& z, int sample_bound = 3);

}  // namespace spancat
