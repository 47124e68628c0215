#pragma once

#include "spancat/comonads.hpp"
#include "spancat/report.hpp"
#include "spancat/span.hpp"

namespace spancat {

/// A span in the category of maps: two functions out of a common apex.
/// Kept distinct from Span so the two sides of the equivalence stay apart.
struct MapSpan {
  FiniteFunction left;   // y: N -> X
  FiniteFunction right;  // b: N -> A

  MapSpan() = default;
  MapSpan(FiniteFunction left_, FiniteFunction right_);

  const FiniteSet& apex() const { return left.dom; }

  friend bool operator==(const MapSpan& a, const MapSpan& b) {
    return a.left == b.left && a.right == b.right;
  }
};

/// An arrow of map-spans: an apex function making both triangles commute.
struct MapSpanMorphism {
  MapSpan source;
  MapSpan target;
  FiniteFunction h;

  MapSpanMorphism() = default;
  MapSpanMorphism(MapSpan source_, MapSpan target_, FiniteFunction h_);
};

/// C(y, N, b) = b y*: computes the composite literally and checks it is
/// isomorphic to the direct reading X <- N -> A, which is returned.
Span functor_c(const MapSpan& ms);

/// C on arrows: the 2-cell with apex map h, verified against the
/// composite through b' eps_h y'*.
SpanMorphism functor_c_on_2cells(const MapSpanMorphism& m);

/// F(R) = (u, tau R, v), read off the tabulation of R.
MapSpan functor_f(const Span& r);

/// Composition of map-spans by pullback of the inner legs.
MapSpan compose_map_spans(const MapSpan& m1, const MapSpan& m2);

/// C(F(R)) is isomorphic to R and F(C(ms)) is isomorphic to ms.
AxiomReport check_roundtrips(const Span& r, const MapSpan& ms);

/// C(m1 m2) agrees with C(m1) C(m2), and the comparison is the one induced
/// by the pullback Beck isomorphism.
AxiomReport check_pseudofunctoriality(const MapSpan& m1, const MapSpan& m2);

}  // namespace spancat
