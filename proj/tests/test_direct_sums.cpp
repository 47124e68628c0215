#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spancat/direct_sums.hpp"
#include "spancat/maps.hpp"

using namespace spancat;

namespace {

Span sample_span(const FiniteSet& src, const FiniteSet& tgt, int apex,
                 unsigned seed) {
  std::vector<int> lt(static_cast<size_t>(apex)), rt(lt.size());
  for (int i = 0; i < apex; ++i) {
    seed = seed * 1103515245u + 12345u;
    lt[static_cast<size_t>(i)] = static_cast<int>((seed >> 8) % src.size);
    seed = seed * 1103515245u + 12345u;
    rt[static_cast<size_t>(i)] = static_cast<int>((seed >> 8) % tgt.size);
  }
  return Span(FiniteFunction(FiniteSet(apex), src, lt),
              FiniteFunction(FiniteSet(apex), tgt, rt));
}

}  // namespace

TEST_CASE("the empty set is a strict zero object") {
  CHECK(zero_object_check(5).holds);
}

TEST_CASE("injections are maps with monic graphs") {
  FiniteSet x(2), y(3);
  auto [i1, i2] = injection_spans(x, y);
  CHECK(is_map(i1));
  CHECK(is_map(i2));
  CHECK(function_from_map(i1).table == std::vector<int>{0, 1});
  CHECK(function_from_map(i2).table == std::vector<int>{2, 3, 4});
  // fully faithful: i* i is the identity, cross composites are empty
  CHECK(find_iso(compose_spans(i1, opposite(i1)), id_span(x)).has_value());
  CHECK(find_iso(compose_spans(i2, opposite(i2)), id_span(y)).has_value());
  CHECK(compose_spans(i1, opposite(i2)).apex().size == 0);
}

TEST_CASE("the codiagonal is a map both ways of building it") {
  for (int n = 0; n <= 4; ++n) CHECK(codiagonal_is_map(FiniteSet(n)).holds);
}

TEST_CASE("homs out of a sum split along the injections") {
  FiniteSet x(2), y(1), z(2);
  FiniteSet sum(coproduct(x, y).set.size);
  std::vector<Span> samples = all_spans_up_to(sum, z, 2);
  CHECK(direct_sum_hom_equivalence(x, y, z, samples).holds);
}

TEST_CASE("matrix decomposition and assembly are mutually inverse") {
  std::vector<FiniteSet> rows{FiniteSet(2), FiniteSet(1)};
  std::vector<FiniteSet> cols{FiniteSet(1), FiniteSet(2)};
  FiniteSet src(3), tgt(3);
  for (int apex = 0; apex <= 5; ++apex)
    for (unsigned seed = 1; seed <= 6; ++seed) {
      Span r = sample_span(src, tgt, apex, seed);
      SpanMatrix m = matrix_of_span(r, rows, cols);
      Span back = span_of_matrix(m);
      CHECK(back.apex().size == r.apex().size);
      CHECK(find_iso(back, r).has_value());
      // entries carry the right boundaries
      for (size_t i = 0; i < m.entries.size(); ++i)
        for (size_t j = 0; j < m.entries[i].size(); ++j) {
          CHECK(m.entries[i][j].src() == rows[i]);
          CHECK(m.entries[i][j].tgt() == cols[j]);
        }
    }
}

TEST_CASE("matrix product agrees with composition of assembled spans") {
  std::vector<FiniteSet> rs{FiniteSet(1), FiniteSet(2)};
  std::vector<FiniteSet> ms{FiniteSet(2), FiniteSet(1)};
  std::vector<FiniteSet> cs{FiniteSet(1), FiniteSet(1), FiniteSet(1)};
  FiniteSet rsum(3), msum(3), csum(3);
  for (unsigned seed = 1; seed <= 5; ++seed) {
    SpanMatrix a = matrix_of_span(sample_span(rsum, msum, 4, seed), rs, ms);
    SpanMatrix b =
        matrix_of_span(sample_span(msum, csum, 3, seed + 17), ms, cs);
    SpanMatrix prod = matrix_compose(a, b);
    Span direct = compose_spans(span_of_matrix(a), span_of_matrix(b));
    CHECK(find_iso(span_of_matrix(prod), direct).has_value());
  }
}

TEST_CASE("matrix entries obey the usual sum-of-products sizes") {
  std::vector<FiniteSet> rs{FiniteSet(1), FiniteSet(1)};
  std::vector<FiniteSet> ms{FiniteSet(1), FiniteSet(1)};
  std::vector<FiniteSet> cs{FiniteSet(1)};
  FiniteSet two(2), one(1);
  SpanMatrix a = matrix_of_span(sample_span(two, two, 4, 3), rs, ms);
  SpanMatrix b = matrix_of_span(sample_span(two, one, 3, 5), ms, cs);
  SpanMatrix prod = matrix_compose(a, b);
  for (size_t i = 0; i < 2; ++i) {
    int expected = 0;
    for (size_t k = 0; k < 2; ++k)
      expected += compose_spans(a.entries[i][k], b.entries[k][0]).apex().size;
    CHECK(prod.entries[i][0].apex().size == expected);
  }
}

TEST_CASE("the sum is also a product") {
  for (int nx = 0; nx <= 3; ++nx)
    for (int ny = 0; ny <= 3; ++ny)
      CHECK(canonical_sum_to_product(FiniteSet(nx), FiniteSet(ny)).holds);
}

TEST_CASE("the base category is lextensive as far as we can see") {
  for (int nx = 0; nx <= 2; ++nx)
    for (int ny = 0; ny <= 2; ++ny)
      CHECK(check_lextensive_base(FiniteSet(nx), FiniteSet(ny), FiniteSet(2))
                .holds);
}

TEST_CASE("matrix validation rejects ragged or mismatched blocks") {
  FiniteSet one(1);
  Span entry = id_span(one);
  CHECK_THROWS_AS(SpanMatrix({one, one}, {one}, {{entry}}),
                  std::invalid_argument);
  Span wrong(FiniteFunction(one, FiniteSet(2), {0}),
             FiniteFunction(one, one, {0}));
  CHECK_THROWS_AS(SpanMatrix({one}, {one}, {{wrong}}), std::invalid_argument);
}
