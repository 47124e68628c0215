#pragma once

#include <optional>
#include <vector>

#include "spancat/finset.hpp"

namespace spancat {

/// A span src <- apex -> tgt, the 1-cells of the bicategory.
struct Span {
  FiniteFunction left;   // apex -> src
  FiniteFunction right;  // apex -> tgt

  Span() = default;
  Span(FiniteFunction left_, FiniteFunction right_);

  const FiniteSet& src() const { return left.cod; }
  const FiniteSet& tgt() const { return right.cod; }
  const FiniteSet& apex() const { return left.dom; }

  friend bool operator==(const Span& a, const Span& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const Span& a, const Span& b) { return !(a == b); }
};

/// A 2-cell: a function between apexes commuting with both legs.
struct SpanMorphism {
  Span source;
  Span target;
  FiniteFunction map;  // source.apex -> target.apex

  SpanMorphism() = default;
  SpanMorphism(Span source_, Span target_, FiniteFunction map_);

  bool is_iso() const { return is_bijection(map); }

  friend bool operator==(const SpanMorphism& a, const SpanMorphism& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
  }
};

/// A 2-cell whose apex map is a bijection.
struct CanonicalIso {
  SpanMorphism cell;

  CanonicalIso() = default;
  explicit CanonicalIso(SpanMorphism cell_);

  CanonicalIso inverted() const;
  operator const SpanMorphism&() const { return cell; }
};

Span id_span(const FiniteSet& a);
SpanMorphism id_cell(const Span& r);

/// Composition in diagram order: compose_spans(R: X->A, T: A->B): X->B.
/// The apex is the pullback of R.right along T.left.
Span compose_spans(const Span& r, const Span& t);

/// The pullback underlying compose_spans(r, t), for decoding apex pairs.
Pullback composition_pullback(const Span& r, const Span& t);

SpanMorphism vertical_compose(const SpanMorphism& a, const SpanMorphism& b);

/// whisker(alpha, T): alpha * T on composites with T applied after.
SpanMorphism whisker(const SpanMorphism& alpha, const Span& t);
/// whisker_left(T, alpha): T applied first.
SpanMorphism whisker_left(const Span& t, const SpanMorphism& alpha);

/// Horizontal composite of 2-cells: compose(a.source, b.source) ->
/// compose(a.target, b.target), with a's boundary applied first.
SpanMorphism horizontal_compose(const SpanMorphism& a, const SpanMorphism& b);

/// Structural isomorphisms of the bicategory.
CanonicalIso associator(const Span& r, const Span& s, const Span& t);
CanonicalIso left_unitor(const Span& r);   // compose(id, R) -> R
CanonicalIso right_unitor(const Span& r);  // compose(R, id) -> R

Span tensor(const Span& r, const Span& t);
SpanMorphism tensor_cells(const SpanMorphism& a, const SpanMorphism& b);

Span opposite(const Span& r);
SpanMorphism opposite_cell(const SpanMorphism& a);

/// Searches for an invertible 2-cell R -> R'. Candidates for each apex
/// element are pruned to the matching leg fiber, so the search is linear.
std::optional<CanonicalIso> find_iso(const Span& r, const Span& r2);

/// All 2-cells R -> R' (exhaustive, by fiber-wise candidates).
std::vector<SpanMorphism> all_two_cells(const Span& r, const Span& r2);

/// Number of 2-cells R -> R' without materializing them.
long long count_two_cells(const Span& r, const Span& r2);

/// All spans X -> A with the given apex size, in lexicographic table order.
std::vector<Span> all_spans(const FiniteSet& x, const FiniteSet& a,
                            int apex_size);
/// All spans X -> A with apex size 0..max_apex.
std::vector<Span> all_spans_up_to(const FiniteSet& x, const FiniteSet& a,
                                  int max_apex);

}  // namespace spancat
