#pragma once

#include <optional>

#include "spancat/comonads.hpp"
#include "spancat/maps.hpp"
#include "spancat/report.hpp"

namespace spancat {

// Each checker computes its own witness. A caller may instead supply a
// candidate witness table (e.g. loaded from a file); the checker then
// validates the candidate and reports a counterexample when it is not a
// commuting invertible 2-cell.

/// Unit of the diagonal adjunction d_A -| d_A* is invertible.
AxiomReport check_separable(
    const FiniteSet& a,
    const std::optional<FiniteFunction>& candidate = std::nullopt);

/// The mate of the commuting diagonal square (d then 1 (x) d against
/// d then d (x) 1) is invertible.
AxiomReport check_frobenius(
    const FiniteSet& a,
    const std::optional<FiniteFunction>& candidate = std::nullopt);

/// For a cospan of maps a, b, the mate p r* -> a* b of the pullback
/// square is invertible.
AxiomReport check_beck_pullback(
    const Span& a, const Span& b,
    const std::optional<FiniteFunction>& candidate = std::nullopt);

/// The comparison from the domain of a map g to the Eilenberg-Moore
/// object of the comonad g g* is invertible, and g reflects invertibility
/// of 2-cells on a bounded sweep.
AxiomReport check_maps_comonadic(
    const Span& g, int bound = 4,
    const std::optional<FiniteFunction>& candidate = std::nullopt);

/// Separable and Frobenius together.
AxiomReport check_discrete(const FiniteSet& a);

/// Between parallel maps X -> A there is at most one 2-cell and it is
/// invertible.
AxiomReport check_hom_discreteness(const FiniteSet& x, const FiniteSet& a);

/// Separability and the Frobenius property are stable under binary
/// products of objects, with the product witness agreeing with the
/// tensor of the factor witnesses.
AxiomReport check_closure_properties(const FiniteSet& a, const FiniteSet& b);

// Five independently implemented forms of separability; they are provably
// equivalent and the equivalence is exercised by tests.

/// i) the unit of d_A -| d_A* is invertible.
bool separable_unit_invertible(const FiniteSet& a);
/// ii) f <- f -> f with identity legs is a product for every map f: X -> A
/// with |X| <= bound.
bool separable_maps_self_product(const FiniteSet& a, int bound = 3);
/// iii) 1_A <- 1_A -> 1_A is a product.
bool separable_identity_self_product(const FiniteSet& a);
/// iv) the unique 2-cell 1_A -> top is monic (test apexes <= bound).
bool separable_identity_subterminal(const FiniteSet& a, int bound = 3);
/// v) G <- G -> 1_A with the copoint is a product for every copointed G
/// with apex <= bound.
bool separable_copointed_products(const FiniteSet& a, int bound = 3);

}  // namespace spancat
