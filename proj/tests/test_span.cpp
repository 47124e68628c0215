#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spancat/span.hpp"

using namespace spancat;

namespace {

Span fiber_pair_span() {
  // X <- S -> A with a repeated leg pair, so 2-cell fibers are nontrivial
  FiniteSet x(2), a(2), s(4);
  return Span(FiniteFunction(s, x, {0, 0, 1, 1}),
              FiniteFunction(s, a, {0, 0, 1, 0}));
}

}  // namespace

TEST_CASE("composition computes the fiber pullback") {
  FiniteSet x(2), a(3), b(2);
  Span r(FiniteFunction(FiniteSet(3), x, {0, 1, 1}),
         FiniteFunction(FiniteSet(3), a, {0, 1, 2}));
  Span t(FiniteFunction(FiniteSet(3), a, {0, 0, 2}),
         FiniteFunction(FiniteSet(3), b, {0, 1, 1}));
  Span c = compose_spans(r, t);
  // pairs (s, u) with right(s) = left(u): (0,0), (0,1), (2,2)
  CHECK(c.apex().size == 3);
  CHECK(c.left.table == std::vector<int>{0, 0, 1});
  CHECK(c.right.table == std::vector<int>{0, 1, 1});
}

TEST_CASE("identity spans are units up to the unitors") {
  Span r = fiber_pair_span();
  CHECK(left_unitor(r).cell.is_iso());
  CHECK(right_unitor(r).cell.is_iso());
  CHECK(left_unitor(r).cell.source == compose_spans(id_span(r.src()), r));
  CHECK(right_unitor(r).cell.source == compose_spans(r, id_span(r.tgt())));
  CHECK(left_unitor(r).cell.target == r);
}

TEST_CASE("associator is an invertible 2-cell with the right boundary") {
  FiniteSet x(2);
  auto spans = all_spans_up_to(x, x, 2);
  for (const Span& r : spans)
    for (const Span& s : spans)
      for (const Span& t : spans) {
        CanonicalIso a = associator(r, s, t);
        CHECK(a.cell.source == compose_spans(compose_spans(r, s), t));
        CHECK(a.cell.target == compose_spans(r, compose_spans(s, t)));
        SpanMorphism round =
            vertical_compose(a.cell, a.inverted().cell);
        CHECK(round == id_cell(a.cell.source));
      }
}

TEST_CASE("pentagon-style reassociation agrees on both routes") {
  FiniteSet x(2);
  Span r = fiber_pair_span();
  Span s(FiniteFunction(FiniteSet(2), x, {0, 1}),
         FiniteFunction(FiniteSet(2), x, {1, 1}));
  Span t = id_span(x);
  Span u = opposite(r);
  // ((rs)t)u -> r(s(tu)) along the two pentagon routes
  SpanMorphism route1 = vertical_compose(
      associator(compose_spans(r, s), t, u).cell,
      vertical_compose(associator(r, s, compose_spans(t, u)).cell,
                       id_cell(compose_spans(
                           r, compose_spans(s, compose_spans(t, u))))));
  SpanMorphism route2 = vertical_compose(
      whisker(associator(r, s, t).cell, u),
      vertical_compose(associator(r, compose_spans(s, t), u).cell,
                       whisker_left(r, associator(s, t, u).cell)));
  CHECK(route1 == route2);
}

TEST_CASE("interchange of vertical and horizontal composition") {
  FiniteSet x(2);
  auto spans = all_spans_up_to(x, x, 2);
  for (const Span& r1 : spans)
    for (const Span& r2 : spans)
      for (const SpanMorphism& a1 : all_two_cells(r1, r2))
        for (const Span& s1 : spans)
          for (const Span& s2 : spans)
            for (const SpanMorphism& b1 : all_two_cells(s1, s2)) {
              // (a2 a1) * (b2 b1) = (a2 * b2)(a1 * b1) for identities a2, b2
              SpanMorphism lhs = horizontal_compose(
                  vertical_compose(a1, id_cell(r2)),
                  vertical_compose(b1, id_cell(s2)));
              SpanMorphism rhs = vertical_compose(
                  horizontal_compose(a1, b1),
                  horizontal_compose(id_cell(r2), id_cell(s2)));
              CHECK(lhs == rhs);
            }
}

TEST_CASE("two-cell enumeration and counting agree") {
  Span r = fiber_pair_span();
  Span s = fiber_pair_span();
  auto cells = all_two_cells(r, s);
  CHECK(static_cast<long long>(cells.size()) == count_two_cells(r, s));
  // fibers over (0,0) have two elements, so 0 and 1 each have 2 choices
  CHECK(cells.size() == 4);
  for (const auto& c : cells) {
    CHECK(c.source == r);
    CHECK(c.target == s);
  }
}

TEST_CASE("find_iso agrees with exhaustive search") {
  FiniteSet x(2);
  auto spans = all_spans_up_to(x, x, 3);
  for (const Span& r : spans)
    for (const Span& s : spans) {
      bool brute = false;
      for (const SpanMorphism& c : all_two_cells(r, s))
        if (c.is_iso()) brute = true;
      CHECK(find_iso(r, s).has_value() == brute);
    }
}

TEST_CASE("opposite is involutive and reverses boundaries") {
  Span r = fiber_pair_span();
  CHECK(opposite(opposite(r)) == r);
  CHECK(opposite(r).src() == r.tgt());
  CHECK(opposite(compose_spans(r, opposite(r))).src() == r.src());
}

TEST_CASE("tensor is strictly associative on the nose") {
  FiniteSet x(2), y(3), z(2);
  Span r(FiniteFunction(FiniteSet(2), x, {0, 1}),
         FiniteFunction(FiniteSet(2), y, {2, 0}));
  Span s = id_span(y);
  Span t(FiniteFunction(FiniteSet(1), z, {1}),
         FiniteFunction(FiniteSet(1), z, {0}));
  CHECK(tensor(tensor(r, s), t) == tensor(r, tensor(s, t)));
}

TEST_CASE("span enumeration is complete and duplicate free") {
  FiniteSet x(2), a(2);
  auto spans = all_spans(x, a, 2);
  CHECK(spans.size() == 16);
  CHECK(all_spans_up_to(x, a, 2).size() == 1 + 4 + 16);
}

TEST_CASE("span morphism validation rejects non-commuting maps") {
  FiniteSet x(2);
  Span r(FiniteFunction(FiniteSet(1), x, {0}),
         FiniteFunction(FiniteSet(1), x, {0}));
  Span s(FiniteFunction(FiniteSet(1), x, {1}),
         FiniteFunction(FiniteSet(1), x, {1}));
  CHECK_THROWS_AS(SpanMorphism(r, s, identity_fn(FiniteSet(1))),
                  std::invalid_argument);
}
