#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spancat {

/// A finite set with elements 0..size-1. Labels are display-only and never
/// affect equality.
struct FiniteSet {
  int size = 0;
  std::optional<std::vector<std::string>> labels;

  FiniteSet() = default;
  explicit FiniteSet(int n);
  FiniteSet(int n, std::vector<std::string> names);

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.size == b.size;
  }
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) {
    return !(a == b);
  }
};

/// A total function between finite sets, stored as a lookup table.
struct FiniteFunction {
  FiniteSet dom;
  FiniteSet cod;
  std::vector<int> table;

  FiniteFunction() = default;
  FiniteFunction(FiniteSet dom_, FiniteSet cod_, std::vector<int> table_);

  int operator()(int i) const { return table.at(static_cast<size_t>(i)); }

  friend bool operator==(const FiniteFunction& f, const FiniteFunction& g) {
    return f.dom == g.dom && f.cod == g.cod && f.table == g.table;
  }
  friend bool operator!=(const FiniteFunction& f, const FiniteFunction& g) {
    return !(f == g);
  }
};

/// A cone over some diagram: an apex together with legs out of it.
struct Cone {
  FiniteSet apex;
  std::vector<FiniteFunction> legs;
};

FiniteFunction identity_fn(const FiniteSet& a);

/// Composition in diagram order: compose_fn(f, g) is "f then g".
FiniteFunction compose_fn(const FiniteFunction& f, const FiniteFunction& g);

/// Binary product with the fixed pair encoding i*|B|+j.
struct ProductSet {
  FiniteSet set;
  FiniteFunction proj1;
  FiniteFunction proj2;
};
ProductSet product(const FiniteSet& a, const FiniteSet& b);

int pair_encode(int i, int j, int b_size);
std::pair<int, int> pair_decode(int e, int b_size);

/// The pairing T -> A x B induced by f: T->A and g: T->B.
FiniteFunction pair_fn(const FiniteFunction& f, const FiniteFunction& g);

/// Product of functions f x g : A x B -> C x D.
FiniteFunction product_fn(const FiniteFunction& f, const FiniteFunction& g);

/// Pullback of f: A->C and g: B->C. The apex enumerates the pairs (a, b)
/// with f(a) = g(b) in lexicographic order, so results are reproducible.
struct Pullback {
  FiniteSet apex;
  FiniteFunction into_left;   // P -> A
  FiniteFunction into_right;  // P -> B
  std::vector<std::pair<int, int>> pairs;

  /// Position of the pair (a, b) in the apex enumeration, or -1.
  int index_of(int a, int b) const;

  Cone cone() const { return Cone{apex, {into_left, into_right}}; }
};
Pullback pullback(const FiniteFunction& f, const FiniteFunction& g);

/// The mediating map T -> P for a competing cone (h: T->A, k: T->B).
FiniteFunction mediate(const Pullback& pb, const FiniteFunction& h,
                       const FiniteFunction& k);

/// Equalizer of a parallel pair; the single leg is the (injective) inclusion.
Cone equalizer(const FiniteFunction& f, const FiniteFunction& g);

/// Disjoint union with block layout [A then B].
struct CoproductSet {
  FiniteSet set;
  FiniteFunction inj1;
  FiniteFunction inj2;
};
CoproductSet coproduct(const FiniteSet& a, const FiniteSet& b);

/// Copairing A+B -> T of f: A->T and g: B->T.
FiniteFunction copair_fn(const FiniteFunction& f, const FiniteFunction& g);

bool is_bijection(const FiniteFunction& f);
bool is_injective(const FiniteFunction& f);
bool is_surjective(const FiniteFunction& f);
FiniteFunction inverse(const FiniteFunction& f);

/// All functions dom -> cod, in lexicographic table order.
std::vector<FiniteFunction> all_functions(const FiniteSet& dom,
                                          const FiniteSet& cod);

}  // namespace spancat
