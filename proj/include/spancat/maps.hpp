#pragma once

#include <vector>

#include "spancat/span.hpp"

namespace spancat {

/// A map is a span whose left leg is invertible (the graph of a function).
bool is_map(const Span& r);

struct Adjunction {
  Span left;            // the map f
  Span right;           // f* = opposite(f)
  SpanMorphism unit;    // 1_X -> compose(f, f*)
  SpanMorphism counit;  // compose(f*, f) -> 1_A
};

/// Canonical adjunction data for a map; triangle identities are verified.
Adjunction make_adjunction(const Span& r);

/// A square of the Grothendieck bicategory: top and bottom are maps,
/// the fill is a 2-cell compose(left, bottom) -> compose(top, right),
/// i.e. uR -> Sf in right-to-left notation.
struct GSquare {
  Span top;     // f: X -> Y
  Span bottom;  // u: A -> B
  Span left;    // R: X -> A
  Span right;   // S: Y -> B
  SpanMorphism fill;

  GSquare() = default;
  GSquare(Span top_, Span bottom_, Span left_, Span right_,
          SpanMorphism fill_);
};

/// Identity square on a 1-cell R (top and bottom identities).
GSquare identity_square(const Span& r);

/// A commuting square of maps, with the canonical fill found by iso search
/// (unique since both composites are maps).
GSquare square_of_maps(const Span& top, const Span& bottom, const Span& left,
                       const Span& right);

/// The mate compose(f*, R) -> compose(S, u*) of the fill, i.e.
/// Rf* -> u*S, built from whiskering, structural isos and vertical
/// composition across the adjunctions f -| f* and u -| u*.
SpanMorphism mate(const GSquare& square, const Adjunction& adj_top,
                  const Adjunction& adj_bottom);
SpanMorphism mate(const GSquare& square);

/// Side-by-side pasting: right boundary of a matches left boundary of b.
GSquare paste_horizontal(const GSquare& a, const GSquare& b);
/// Stacked pasting: bottom of a is the top of b.
GSquare paste_vertical(const GSquare& a, const GSquare& b);
/// Pastes a rectangular grid, rows first.
GSquare paste(const std::vector<std::vector<GSquare>>& grid);

Span map_from_function(const FiniteFunction& f);
FiniteFunction function_from_map(const Span& r);

/// Lemma check: if compose(F, g) is isomorphic to the map h then F is a map.
bool reflects_map(const Span& f, const Span& g, const Span& h);

}  // namespace spancat
