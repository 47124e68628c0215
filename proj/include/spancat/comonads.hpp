#pragma once

#include <optional>

#include "spancat/maps.hpp"
#include "spancat/report.hpp"
#include "spancat/span.hpp"

namespace spancat {

/// A comonad in the span bicategory: an equal-leg endospan together with
/// its copoint and the (unique) comultiplication.
struct Comonad {
  Span carrier;          // G: A -> A
  SpanMorphism counit;   // eps: G -> 1_A
  SpanMorphism comult;   // delta: G -> GG
};

/// Eilenberg-Moore data for a comonad: the apex with its projection map
/// and coalgebra structure.
struct EMObject {
  FiniteSet object;        // A_G
  Span projection;         // map g_G: A_G -> A
  SpanMorphism coalgebra;  // gamma: g_G -> compose(g_G, G)
};

/// Tabulation of a 1-cell R as a span of maps (u, v) with invertible mate.
struct Tabulation {
  FiniteSet apex_object;  // tau R
  Span u;                 // map tau R -> X
  Span v;                 // map tau R -> A
  SpanMorphism omega;     // v -> compose(u, R)
};

/// The unique copoint G -> 1_A, present exactly when both legs agree.
/// Uniqueness is re-verified by exhaustive 2-cell search.
std::optional<SpanMorphism> find_copoint(const Span& g);

/// Builds the comonad structure on a copointed endospan. The
/// comultiplication is the fiber diagonal s -> (s, s); the counit
/// triangles, coassociativity and uniqueness (exhaustive search over all
/// 2-cells G -> GG satisfying the triangles) are all verified.
Comonad comultiplication(const Span& g, const SpanMorphism& eps);

/// Convenience: copoint plus comultiplication for an equal-leg endospan.
Comonad comonad_on(const Span& g);

/// Eilenberg-Moore object of a comonad, with the coalgebra gamma and a
/// brute-force check of the universal property on test carriers of size
/// up to test_bound.
EMObject em_object(const Comonad& c, int test_bound = 4);

/// The mate compose(g, opposite(g)) -> G of a coalgebra gamma: g -> Gg,
/// taken across g -| g*.
SpanMorphism coalgebra_mate(const Span& g, const SpanMorphism& gamma,
                            const Span& carrier);

/// The comonad G(R) on X (x) A induced by a 1-cell R: X -> A, built as the
/// composite (X (x) d*) (X (x) R (x) A) (d (x) A). Verifies that composing
/// with the projections recovers R up to isomorphism.
Comonad g_of_r(const Span& r);

/// Tabulates R: X -> A by the graphs of its legs, with counit omega = the
/// unit of the left-leg adjunction whiskered by the right leg.
/// Couniversality is checked on bounded test spans of maps.
Tabulation tabulate(const Span& r, int test_bound = 3);

/// Checks that G <- GH -> H with whiskered counits is a product diagram in
/// the hom-category (brute force over test spans with apex <= bound).
AxiomReport check_wedge_of_copointed(const Span& g, const Span& h,
                                     int bound = 4);

/// Evaluates the two comonad-arrow equations for phi: fG -> Hf.
bool d_arrow_equations_hold(const Span& f, const Comonad& g, const Comonad& h,
                            const SpanMorphism& phi);

}  // namespace spancat
