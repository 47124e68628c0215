#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spancat/finset.hpp"

#include <set>

using namespace spancat;

namespace {

// independent oracle: all pairs (a, b) with f(a) = g(b), in lex order
std::vector<std::pair<int, int>> pullback_oracle(const FiniteFunction& f,
                                                 const FiniteFunction& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      if (f(a) == g(b)) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("pair encoding round trip") {
  for (int bs = 1; bs <= 4; ++bs)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < bs; ++j) {
        auto [x, y] = pair_decode(pair_encode(i, j, bs), bs);
        CHECK(x == i);
        CHECK(y == j);
      }
  CHECK(pair_encode(2, 1, 3) == 7);
}

TEST_CASE("composition is in diagram order") {
  FiniteSet a(2), b(3), c(2);
  FiniteFunction f(a, b, {2, 0});
  FiniteFunction g(b, c, {1, 1, 0});
  FiniteFunction h = compose_fn(f, g);
  CHECK(h.table == std::vector<int>{0, 1});
}

TEST_CASE("pullback matches the enumeration oracle") {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb)
      for (int nc = 0; nc <= 3; ++nc) {
        FiniteSet a(na), b(nb), c(nc);
        for (const FiniteFunction& f : all_functions(a, c))
          for (const FiniteFunction& g : all_functions(b, c)) {
            Pullback pb = pullback(f, g);
            CHECK(pb.pairs == pullback_oracle(f, g));
            for (size_t i = 0; i < pb.pairs.size(); ++i) {
              CHECK(pb.into_left(static_cast<int>(i)) == pb.pairs[i].first);
              CHECK(pb.into_right(static_cast<int>(i)) == pb.pairs[i].second);
              CHECK(pb.index_of(pb.pairs[i].first, pb.pairs[i].second) ==
                    static_cast<int>(i));
            }
          }
      }
}

TEST_CASE("pullback universal property by brute force") {
  FiniteSet a(3), b(2), c(2);
  for (const FiniteFunction& f : all_functions(a, c))
    for (const FiniteFunction& g : all_functions(b, c)) {
      Pullback pb = pullback(f, g);
      for (int nt = 0; nt <= 2; ++nt) {
        FiniteSet t(nt);
        for (const FiniteFunction& h : all_functions(t, a))
          for (const FiniteFunction& k : all_functions(t, b)) {
            if (!(compose_fn(h, f) == compose_fn(k, g))) continue;
            FiniteFunction m = mediate(pb, h, k);
            CHECK(compose_fn(m, pb.into_left) == h);
            CHECK(compose_fn(m, pb.into_right) == k);
            int count = 0;
            for (const FiniteFunction& cand : all_functions(t, pb.apex))
              if (compose_fn(cand, pb.into_left) == h &&
                  compose_fn(cand, pb.into_right) == k)
                ++count;
            CHECK(count == 1);
          }
      }
    }
}

TEST_CASE("product projections and pairing") {
  FiniteSet a(2), b(3);
  ProductSet p = product(a, b);
  CHECK(p.set.size == 6);
  for (int e = 0; e < 6; ++e) {
    CHECK(p.proj1(e) == e / 3);
    CHECK(p.proj2(e) == e % 3);
  }
  FiniteSet t(2);
  FiniteFunction f(t, a, {1, 0});
  FiniteFunction g(t, b, {2, 2});
  FiniteFunction pr = pair_fn(f, g);
  CHECK(compose_fn(pr, p.proj1) == f);
  CHECK(compose_fn(pr, p.proj2) == g);
  // uniqueness
  int count = 0;
  for (const FiniteFunction& cand : all_functions(t, p.set))
    if (compose_fn(cand, p.proj1) == f && compose_fn(cand, p.proj2) == g)
      ++count;
  CHECK(count == 1);
}

TEST_CASE("equalizer matches its oracle and is universal") {
  FiniteSet a(3), b(2);
  for (const FiniteFunction& f : all_functions(a, b))
    for (const FiniteFunction& g : all_functions(a, b)) {
      Cone e = equalizer(f, g);
      std::vector<int> expected;
      for (int x = 0; x < a.size; ++x)
        if (f(x) == g(x)) expected.push_back(x);
      CHECK(e.legs.size() == 1);
      CHECK(e.legs[0].table == expected);
      // any equalizing element is hit exactly once
      CHECK(is_injective(e.legs[0]));
    }
}

TEST_CASE("coproduct and copairing") {
  FiniteSet a(2), b(3), t(2);
  CoproductSet c = coproduct(a, b);
  CHECK(c.set.size == 5);
  CHECK(c.inj1.table == std::vector<int>{0, 1});
  CHECK(c.inj2.table == std::vector<int>{2, 3, 4});
  FiniteFunction f(a, t, {1, 0});
  FiniteFunction g(b, t, {0, 0, 1});
  FiniteFunction cp = copair_fn(f, g);
  CHECK(compose_fn(c.inj1, cp) == f);
  CHECK(compose_fn(c.inj2, cp) == g);
}

TEST_CASE("bijection utilities") {
  FiniteSet a(3);
  FiniteFunction id = identity_fn(a);
  CHECK(is_bijection(id));
  CHECK(inverse(id) == id);
  FiniteFunction swap(a, a, {1, 0, 2});
  CHECK(is_bijection(swap));
  CHECK(compose_fn(swap, inverse(swap)) == id);
  FiniteFunction collapse(a, a, {0, 0, 2});
  CHECK(!is_bijection(collapse));
  CHECK(!is_injective(collapse));
  CHECK(!is_surjective(collapse));
}

TEST_CASE("all_functions enumerates lexicographically without repeats") {
  FiniteSet d(2), c(3);
  auto fns = all_functions(d, c);
  CHECK(fns.size() == 9);
  CHECK(fns.front().table == std::vector<int>{0, 0});
  CHECK(fns.back().table == std::vector<int>{2, 2});
  std::set<std::vector<int>> seen;
  for (const auto& f : fns) seen.insert(f.table);
  CHECK(seen.size() == 9);
  // empty cases
  CHECK(all_functions(FiniteSet(0), c).size() == 1);
  CHECK(all_functions(d, FiniteSet(0)).empty());
  CHECK(all_functions(FiniteSet(0), FiniteSet(0)).size() == 1);
}

TEST_CASE("function validation rejects bad tables") {
  FiniteSet a(2), b(2);
  CHECK_THROWS_AS(FiniteFunction(a, b, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteFunction(a, b, {0}), std::invalid_argument);
}
