#include "spancat/span.hpp"

#include <stdexcept>

namespace spancat {

Span::Span(FiniteFunction left_, FiniteFunction right_)
    : left(std::move(left_)), right(std::move(right_)) {
  if (left.dom != right.dom)
    throw std::invalid_argument("Span: legs must share the apex");
}

SpanMorphism::SpanMorphism(Span source_, Span target_, FiniteFunction map_)
    : source(std::move(source_)),
      target(std::move(target_)),
      map(std::move(map_)) {
  if (source.src() != target.src() || source.tgt() != target.tgt())
    throw std::invalid_argument("SpanMorphism: spans are not parallel");
  if (map.dom != source.apex() || map.cod != target.apex())
    throw std::invalid_argument("SpanMorphism: map has wrong boundary");
  if (compose_fn(map, target.left) != source.left ||
      compose_fn(map, target.right) != source.right)
    throw std::invalid_argument("SpanMorphism: map does not commute with legs");
}

CanonicalIso::CanonicalIso(SpanMorphism cell_) : cell(std::move(cell_)) {
  if (!cell.is_iso())
    throw std::invalid_argument("CanonicalIso: map is not a bijection");
}

CanonicalIso CanonicalIso::inverted() const {
  return CanonicalIso(
      SpanMorphism(cell.target, cell.source, inverse(cell.map)));
}

Span id_span(const FiniteSet& a) { return Span(identity_fn(a), identity_fn(a)); }

SpanMorphism id_cell(const Span& r) {
  return SpanMorphism(r, r, identity_fn(r.apex()));
}

Pullback composition_pullback(const Span& r, const Span& t) {
  if (r.tgt() != t.src())
    throw std::invalid_argument("compose_spans: boundary mismatch");
  return pullback(r.right, t.left);
}

Span compose_spans(const Span& r, const Span& t) {
  Pullback pb = composition_pullback(r, t);
  return Span(compose_fn(pb.into_left, r.left),
              compose_fn(pb.into_right, t.right));
}

SpanMorphism vertical_compose(const SpanMorphism& a, const SpanMorphism& b) {
  if (!(a.target == b.source))
    throw std::invalid_argument("vertical_compose: boundary mismatch");
  return SpanMorphism(a.source, b.target, compose_fn(a.map, b.map));
}

SpanMorphism whisker(const SpanMorphism& alpha, const Span& t) {
  Pullback src_pb = composition_pullback(alpha.source, t);
  Pullback tgt_pb = composition_pullback(alpha.target, t);
  std::vector<int> map(src_pb.pairs.size());
  for (size_t i = 0; i < src_pb.pairs.size(); ++i) {
    auto [s, u] = src_pb.pairs[i];
    map[i] = tgt_pb.index_of(alpha.map(s), u);
  }
  return SpanMorphism(
      compose_spans(alpha.source, t), compose_spans(alpha.target, t),
      FiniteFunction(src_pb.apex, tgt_pb.apex, std::move(map)));
}

SpanMorphism whisker_left(const Span& t, const SpanMorphism& alpha) {
  Pullback src_pb = composition_pullback(t, alpha.source);
  Pullback tgt_pb = composition_pullback(t, alpha.target);
  std::vector<int> map(src_pb.pairs.size());
  for (size_t i = 0; i < src_pb.pairs.size(); ++i) {
    auto [u, s] = src_pb.pairs[i];
    map[i] = tgt_pb.index_of(u, alpha.map(s));
  }
  return SpanMorphism(
      compose_spans(t, alpha.source), compose_spans(t, alpha.target),
      FiniteFunction(src_pb.apex, tgt_pb.apex, std::move(map)));
}

SpanMorphism horizontal_compose(const SpanMorphism& a, const SpanMorphism& b) {
  return vertical_compose(whisker(a, b.source),
                          whisker_left(a.target, b));
}

CanonicalIso associator(const Span& r, const Span& s, const Span& t) {
  Span rs = compose_spans(r, s);
  Span st = compose_spans(s, t);
  Pullback pb_rs = composition_pullback(r, s);
  Pullback pb_rs_t = composition_pullback(rs, t);
  Pullback pb_st = composition_pullback(s, t);
  Pullback pb_r_st = composition_pullback(r, st);
  std::vector<int> map(pb_rs_t.pairs.size());
  for (size_t i = 0; i < pb_rs_t.pairs.size(); ++i) {
    auto [ij, k] = pb_rs_t.pairs[i];
    auto [a, j] = pb_rs.pairs[static_cast<size_t>(ij)];
    map[i] = pb_r_st.index_of(a, pb_st.index_of(j, k));
  }
  return CanonicalIso(SpanMorphism(
      compose_spans(rs, t), compose_spans(r, st),
      FiniteFunction(pb_rs_t.apex, pb_r_st.apex, std::move(map))));
}

CanonicalIso left_unitor(const Span& r) {
  Span lhs = compose_spans(id_span(r.src()), r);
  Pullback pb = composition_pullback(id_span(r.src()), r);
  std::vector<int> map(pb.pairs.size());
  for (size_t i = 0; i < pb.pairs.size(); ++i) map[i] = pb.pairs[i].second;
  return CanonicalIso(
      SpanMorphism(lhs, r, FiniteFunction(pb.apex, r.apex(), std::move(map))));
}

CanonicalIso right_unitor(const Span& r) {
  Span lhs = compose_spans(r, id_span(r.tgt()));
  Pullback pb = composition_pullback(r, id_span(r.tgt()));
  std::vector<int> map(pb.pairs.size());
  for (size_t i = 0; i < pb.pairs.size(); ++i) map[i] = pb.pairs[i].first;
  return CanonicalIso(
      SpanMorphism(lhs, r, FiniteFunction(pb.apex, r.apex(), std::move(map))));
}

Span tensor(const Span& r, const Span& t) {
  return Span(product_fn(r.left, t.left), product_fn(r.right, t.right));
}

SpanMorphism tensor_cells(const SpanMorphism& a, const SpanMorphism& b) {
  return SpanMorphism(tensor(a.source, b.source), tensor(a.target, b.target),
                      product_fn(a.map, b.map));
}

Span opposite(const Span& r) { return Span(r.right, r.left); }

SpanMorphism opposite_cell(const SpanMorphism& a) {
  return SpanMorphism(opposite(a.source), opposite(a.target), a.map);
}

namespace {

// Per-element candidate targets: apex elements of r2 on the same leg fiber.
std::vector<std::vector<int>> fiber_candidates(const Span& r, const Span& r2) {
  std::vector<std::vector<int>> cands(static_cast<size_t>(r.apex().size));
  for (int s = 0; s < r.apex().size; ++s)
    for (int s2 = 0; s2 < r2.apex().size; ++s2)
      if (r.left(s) == r2.left(s2) && r.right(s) == r2.right(s2))
        cands[static_cast<size_t>(s)].push_back(s2);
  return cands;
}

}  // namespace

std::optional<CanonicalIso> find_iso(const Span& r, const Span& r2) {
  if (r.src() != r2.src() || r.tgt() != r2.tgt()) return std::nullopt;
  if (r.apex().size != r2.apex().size) return std::nullopt;
  auto cands = fiber_candidates(r, r2);
  int n = r.apex().size;
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  // Backtracking over fiber candidates; fibers partition both apexes, so
  // this terminates quickly at desk scale.
  auto rec = [&](auto&& self, int s) -> bool {
    if (s == n) return true;
    for (int c : cands[static_cast<size_t>(s)]) {
      if (used[static_cast<size_t>(c)]) continue;
      used[static_cast<size_t>(c)] = 1;
      map[static_cast<size_t>(s)] = c;
      if (self(self, s + 1)) return true;
      used[static_cast<size_t>(c)] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return CanonicalIso(
      SpanMorphism(r, r2, FiniteFunction(r.apex(), r2.apex(), std::move(map))));
}

std::vector<SpanMorphism> all_two_cells(const Span& r, const Span& r2) {
  std::vector<SpanMorphism> out;
  if (r.src() != r2.src() || r.tgt() != r2.tgt()) return out;
  auto cands = fiber_candidates(r, r2);
  int n = r.apex().size;
  for (const auto& c : cands)
    if (c.empty() && n > 0) return out;
  std::vector<int> map(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int s) -> void {
    if (s == n) {
      out.emplace_back(r, r2, FiniteFunction(r.apex(), r2.apex(), map));
      return;
    }
    for (int c : cands[static_cast<size_t>(s)]) {
      map[static_cast<size_t>(s)] = c;
      self(self, s + 1);
    }
  };
  rec(rec, 0);
  return out;
}

long long count_two_cells(const Span& r, const Span& r2) {
  if (r.src() != r2.src() || r.tgt() != r2.tgt()) return 0;
  auto cands = fiber_candidates(r, r2);
  long long n = 1;
  for (const auto& c : cands) n *= static_cast<long long>(c.size());
  return n;
}

std::vector<Span> all_spans(const FiniteSet& x, const FiniteSet& a,
                            int apex_size) {
  FiniteSet apex(apex_size);
  std::vector<Span> out;
  for (const auto& l : all_functions(apex, x))
    for (const auto& r : all_functions(apex, a)) out.emplace_back(l, r);
  return out;
}

std::vector<Span> all_spans_up_to(const FiniteSet& x, const FiniteSet& a,
                                  int max_apex) {
  std::vector<Span> out;
  for (int k = 0; k <= max_apex; ++k)
    for (auto& s : all_spans(x, a, k)) out.push_back(std::move(s));
  return out;
}

}  // namespace spancat
