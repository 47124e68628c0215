#pragma once

#include "spancat/maps.hpp"
#include "spancat/span.hpp"

namespace spancat {

/// Binary product in a hom-category, with its chosen projections.
struct LocalProduct {
  Span product;      // R /\ S
  SpanMorphism pi;   // R /\ S -> R
  SpanMorphism rho;  // R /\ S -> S
};

/// Product of parallel spans, computed by pullback over X x A.
LocalProduct local_product(const Span& r, const Span& s);

/// The terminal parallel span X <- X x A -> A.
Span local_terminal(const FiniteSet& x, const FiniteSet& a);

/// The unique 2-cell R -> local_terminal (pairing of legs).
SpanMorphism to_local_terminal(const Span& r);

/// The pairing T -> R /\ S of 2-cells T -> R and T -> S.
SpanMorphism local_pair(const LocalProduct& lp, const SpanMorphism& to_r,
                        const SpanMorphism& to_s);

/// The composite d*_A (R (x) S) d_X, isomorphic to the local product.
Span local_product_via_tensor(const Span& r, const Span& s);

/// True when every parallel test span admits at most one 2-cell into R.
/// Test spans are drawn from apex sizes 1..max_test_apex; since 2-cell
/// counts multiply over apex elements, the sweep reduces to single-element
/// test spans, i.e. to the leg fibers of R.
bool is_subterminal(const Span& r, int max_test_apex = -1);

}  // namespace spancat
