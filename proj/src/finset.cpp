#include "spancat/finset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spancat {

FiniteSet::FiniteSet(int n) : size(n) {
  if (n < 0) throw std::invalid_argument("FiniteSet: negative size");
}

FiniteSet::FiniteSet(int n, std::vector<std::string> names) : FiniteSet(n) {
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("FiniteSet: label count != size");
  std::set<std::string> distinct(names.begin(), names.end());
  if (static_cast<int>(distinct.size()) != n)
    throw std::invalid_argument("FiniteSet: labels must be distinct");
  labels = std::move(names);
}

FiniteFunction::FiniteFunction(FiniteSet dom_, FiniteSet cod_,
                               std::vector<int> table_)
    : dom(std::move(dom_)), cod(std::move(cod_)), table(std::move(table_)) {
  if (static_cast<int>(table.size()) != dom.size)
    throw std::invalid_argument("FiniteFunction: table length != dom size");
  for (int v : table)
    if (v < 0 || v >= cod.size)
      throw std::invalid_argument("FiniteFunction: table entry out of range");
}

FiniteFunction identity_fn(const FiniteSet& a) {
  std::vector<int> t(static_cast<size_t>(a.size));
  for (int i = 0; i < a.size; ++i) t[static_cast<size_t>(i)] = i;
  return FiniteFunction(a, a, std::move(t));
}

FiniteFunction compose_fn(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.cod != g.dom)
    throw std::invalid_argument("compose_fn: f.cod != g.dom");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i)
    t[i] = g.table[static_cast<size_t>(f.table[i])];
  return FiniteFunction(f.dom, g.cod, std::move(t));
}

int pair_encode(int i, int j, int b_size) { return i * b_size + j; }

std::pair<int, int> pair_decode(int e, int b_size) {
  return {e / b_size, e % b_size};
}

ProductSet product(const FiniteSet& a, const FiniteSet& b) {
  FiniteSet p(a.size * b.size);
  std::vector<int> t1(static_cast<size_t>(p.size)), t2(t1);
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      int e = pair_encode(i, j, b.size);
      t1[static_cast<size_t>(e)] = i;
      t2[static_cast<size_t>(e)] = j;
    }
  return ProductSet{p, FiniteFunction(p, a, std::move(t1)),
                    FiniteFunction(p, b, std::move(t2))};
}

FiniteFunction pair_fn(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.dom != g.dom)
    throw std::invalid_argument("pair_fn: mismatched domains");
  FiniteSet p(f.cod.size * g.cod.size);
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i)
    t[i] = pair_encode(f.table[i], g.table[i], g.cod.size);
  return FiniteFunction(f.dom, p, std::move(t));
}

FiniteFunction product_fn(const FiniteFunction& f, const FiniteFunction& g) {
  FiniteSet d(f.dom.size * g.dom.size), c(f.cod.size * g.cod.size);
  std::vector<int> t(static_cast<size_t>(d.size));
  for (int i = 0; i < f.dom.size; ++i)
    for (int j = 0; j < g.dom.size; ++j)
      t[static_cast<size_t>(pair_encode(i, j, g.dom.size))] =
          pair_encode(f(i), g(j), g.cod.size);
  return FiniteFunction(d, c, std::move(t));
}

Pullback pullback(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.cod != g.cod)
    throw std::invalid_argument("pullback: mismatched codomains");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      if (f(a) == g(b)) pairs.emplace_back(a, b);
  FiniteSet apex(static_cast<int>(pairs.size()));
  std::vector<int> ta(pairs.size()), tb(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    ta[i] = pairs[i].first;
    tb[i] = pairs[i].second;
  }
  return Pullback{apex, FiniteFunction(apex, f.dom, std::move(ta)),
                  FiniteFunction(apex, g.dom, std::move(tb)),
                  std::move(pairs)};
}

int Pullback::index_of(int a, int b) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
  if (it == pairs.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - pairs.begin());
}

FiniteFunction mediate(const Pullback& pb, const FiniteFunction& h,
                       const FiniteFunction& k) {
  if (h.dom != k.dom)
    throw std::invalid_argument("mediate: mismatched cone domains");
  std::vector<int> t(h.table.size());
  for (size_t i = 0; i < h.table.size(); ++i) {
    int idx = pb.index_of(h.table[i], k.table[i]);
    if (idx < 0)
      throw std::invalid_argument("mediate: cone does not commute");
    t[i] = idx;
  }
  return FiniteFunction(h.dom, pb.apex, std::move(t));
}

Cone equalizer(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw std::invalid_argument("equalizer: non-parallel pair");
  std::vector<int> incl;
  for (int a = 0; a < f.dom.size; ++a)
    if (f(a) == g(a)) incl.push_back(a);
  FiniteSet apex(static_cast<int>(incl.size()));
  return Cone{apex, {FiniteFunction(apex, f.dom, std::move(incl))}};
}

CoproductSet coproduct(const FiniteSet& a, const FiniteSet& b) {
  FiniteSet s(a.size + b.size);
  std::vector<int> t1(static_cast<size_t>(a.size)),
      t2(static_cast<size_t>(b.size));
  for (int i = 0; i < a.size; ++i) t1[static_cast<size_t>(i)] = i;
  for (int j = 0; j < b.size; ++j) t2[static_cast<size_t>(j)] = a.size + j;
  return CoproductSet{s, FiniteFunction(a, s, std::move(t1)),
                      FiniteFunction(b, s, std::move(t2))};
}

FiniteFunction copair_fn(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.cod != g.cod)
    throw std::invalid_argument("copair_fn: mismatched codomains");
  FiniteSet d(f.dom.size + g.dom.size);
  std::vector<int> t;
  t.reserve(static_cast<size_t>(d.size));
  t.insert(t.end(), f.table.begin(), f.table.end());
  t.insert(t.end(), g.table.begin(), g.table.end());
  return FiniteFunction(d, f.cod, std::move(t));
}

bool is_injective(const FiniteFunction& f) {
  std::vector<char> seen(static_cast<size_t>(f.cod.size), 0);
  for (int v : f.table) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool is_surjective(const FiniteFunction& f) {
  std::vector<char> seen(static_cast<size_t>(f.cod.size), 0);
  for (int v : f.table) seen[static_cast<size_t>(v)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_bijection(const FiniteFunction& f) {
  return f.dom.size == f.cod.size && is_injective(f);
}

FiniteFunction inverse(const FiniteFunction& f) {
  if (!is_bijection(f))
    throw std::invalid_argument("inverse: not a bijection");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i)
    t[static_cast<size_t>(f.table[i])] = static_cast<int>(i);
  return FiniteFunction(f.cod, f.dom, std::move(t));
}

std::vector<FiniteFunction> all_functions(const FiniteSet& dom,
                                          const FiniteSet& cod) {
  std::vector<FiniteFunction> out;
  if (dom.size == 0) {
    out.emplace_back(dom, cod, std::vector<int>{});
    return out;
  }
  if (cod.size == 0) return out;  // no total function into the empty set
  std::vector<int> t(static_cast<size_t>(dom.size), 0);
  while (true) {
    out.emplace_back(dom, cod, t);
    int i = dom.size - 1;
    while (i >= 0) {
      if (++t[static_cast<size_t>(i)] < cod.size) break;
      t[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace spancat
