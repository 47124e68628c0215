#include "spancat/maps.hpp"

#include <stdexcept>

namespace spancat {

bool is_map(const Span& r) { return is_bijection(r.left); }

namespace {

SpanMorphism vert(const SpanMorphism& a, const SpanMorphism& b) {
  return vertical_compose(a, b);
}

void check_triangles(const Adjunction& adj) {
  const Span& f = adj.left;
  const Span& fs = adj.right;
  // (eps f)(f eta) = 1_f, modulo unitors and the associator.
  SpanMorphism t1 = vert(
      vert(vert(vert(left_unitor(f).inverted().cell, whisker(adj.unit, f)),
                associator(f, fs, f).cell),
           whisker_left(f, adj.counit)),
      right_unitor(f).cell);
  if (!(t1 == id_cell(f)))
    throw std::logic_error("make_adjunction: first triangle identity failed");
  SpanMorphism t2 = vert(
      vert(vert(vert(right_unitor(fs).inverted().cell,
                     whisker_left(fs, adj.unit)),
                associator(fs, f, fs).inverted().cell),
           whisker(adj.counit, fs)),
      left_unitor(fs).cell);
  if (!(t2 == id_cell(fs)))
    throw std::logic_error("make_adjunction: second triangle identity failed");
}

}  // namespace

Adjunction make_adjunction(const Span& r) {
  if (!is_map(r))
    throw std::invalid_argument("make_adjunction: span is not a map");
  Span rs = opposite(r);
  FiniteFunction x_inv = inverse(r.left);

  // Unit 1_X -> f*f: the apex enumerates {(s, s') | a(s) = a(s')} and the
  // unit sends e to the diagonal pair over x^{-1}(e).
  Pullback unit_pb = composition_pullback(r, rs);
  std::vector<int> unit_map(static_cast<size_t>(r.src().size));
  for (int e = 0; e < r.src().size; ++e) {
    int s = x_inv(e);
    unit_map[static_cast<size_t>(e)] = unit_pb.index_of(s, s);
  }
  SpanMorphism unit(
      id_span(r.src()), compose_spans(r, rs),
      FiniteFunction(r.src(), unit_pb.apex, std::move(unit_map)));

  // Counit ff* -> 1_A: the apex is the diagonal (x is invertible) and the
  // counit collapses (s, s) to a(s).
  Pullback counit_pb = composition_pullback(rs, r);
  std::vector<int> counit_map(static_cast<size_t>(counit_pb.apex.size));
  for (size_t i = 0; i < counit_pb.pairs.size(); ++i)
    counit_map[i] = r.right(counit_pb.pairs[i].first);
  SpanMorphism counit(
      compose_spans(rs, r), id_span(r.tgt()),
      FiniteFunction(counit_pb.apex, r.tgt(), std::move(counit_map)));

  Adjunction adj{r, rs, std::move(unit), std::move(counit)};
  check_triangles(adj);
  return adj;
}

GSquare::GSquare(Span top_, Span bottom_, Span left_, Span right_,
                 SpanMorphism fill_)
    : top(std::move(top_)),
      bottom(std::move(bottom_)),
      left(std::move(left_)),
      right(std::move(right_)),
      fill(std::move(fill_)) {
  if (!is_map(top) || !is_map(bottom))
    throw std::invalid_argument("GSquare: top and bottom must be maps");
  if (!(fill.source == compose_spans(left, bottom)) ||
      !(fill.target == compose_spans(top, right)))
    throw std::invalid_argument("GSquare: fill has wrong boundary");
}

GSquare identity_square(const Span& r) {
  SpanMorphism fill = vert(right_unitor(r).cell, left_unitor(r).inverted().cell);
  return GSquare(id_span(r.src()), id_span(r.tgt()), r, r, std::move(fill));
}

GSquare square_of_maps(const Span& top, const Span& bottom, const Span& left,
                       const Span& right) {
  auto iso = find_iso(compose_spans(left, bottom), compose_spans(top, right));
  if (!iso)
    throw std::invalid_argument("square_of_maps: square does not commute");
  return GSquare(top, bottom, left, right, iso->cell);
}

SpanMorphism mate(const GSquare& sq, const Adjunction& adj_top,
                  const Adjunction& adj_bottom) {
  if (!(adj_top.left == sq.top) || !(adj_bottom.left == sq.bottom))
    throw std::invalid_argument("mate: adjunctions do not match the square");
  const Span& fs = adj_top.right;
  const Span& us = adj_bottom.right;
  Span m0 = compose_spans(fs, sq.left);  // Rf*
  SpanMorphism acc = right_unitor(m0).inverted().cell;
  acc = vert(acc, whisker_left(m0, adj_bottom.unit));
  acc = vert(acc, associator(m0, sq.bottom, us).inverted().cell);
  acc = vert(acc, whisker(associator(fs, sq.left, sq.bottom).cell, us));
  acc = vert(acc, whisker(whisker_left(fs, sq.fill), us));
  acc = vert(acc, whisker(associator(fs, sq.top, sq.right).inverted().cell, us));
  acc = vert(acc, whisker(whisker(adj_top.counit, sq.right), us));
  acc = vert(acc, whisker(left_unitor(sq.right).cell, us));
  return acc;  // Rf* -> u*S
}

SpanMorphism mate(const GSquare& sq) {
  return mate(sq, make_adjunction(sq.top), make_adjunction(sq.bottom));
}

GSquare paste_horizontal(const GSquare& a, const GSquare& b) {
  if (!(a.right == b.left))
    throw std::invalid_argument("paste_horizontal: boundary mismatch");
  SpanMorphism fill = associator(a.left, a.bottom, b.bottom).inverted().cell;
  fill = vert(fill, whisker(a.fill, b.bottom));
  fill = vert(fill, associator(a.top, a.right, b.bottom).cell);
  fill = vert(fill, whisker_left(a.top, b.fill));
  fill = vert(fill, associator(a.top, b.top, b.right).inverted().cell);
  return GSquare(compose_spans(a.top, b.top), compose_spans(a.bottom, b.bottom),
                 a.left, b.right, std::move(fill));
}

GSquare paste_vertical(const GSquare& a, const GSquare& b) {
  if (!(a.bottom == b.top))
    throw std::invalid_argument("paste_vertical: boundary mismatch");
  SpanMorphism fill = associator(a.left, b.left, b.bottom).cell;
  fill = vert(fill, whisker_left(a.left, b.fill));
  fill = vert(fill, associator(a.left, a.bottom, b.right).inverted().cell);
  fill = vert(fill, whisker(a.fill, b.right));
  fill = vert(fill, associator(a.top, a.right, b.right).cell);
  return GSquare(a.top, b.bottom, compose_spans(a.left, b.left),
                 compose_spans(a.right, b.right), std::move(fill));
}

GSquare paste(const std::vector<std::vector<GSquare>>& grid) {
  if (grid.empty() || grid.front().empty())
    throw std::invalid_argument("paste: empty grid");
  std::vector<GSquare> rows;
  for (const auto& row : grid) {
    GSquare acc = row.front();
    for (size_t i = 1; i < row.size(); ++i)
      acc = paste_horizontal(acc, row[i]);
    rows.push_back(std::move(acc));
  }
  GSquare acc = rows.front();
  for (size_t i = 1; i < rows.size(); ++i) acc = paste_vertical(acc, rows[i]);
  return acc;
}

Span map_from_function(const FiniteFunction& f) {
  return Span(identity_fn(f.dom), f);
}

FiniteFunction function_from_map(const Span& r) {
  if (!is_map(r))
    throw std::invalid_argument("function_from_map: span is not a map");
  return compose_fn(inverse(r.left), r.right);
}

bool reflects_map(const Span& f, const Span& g, const Span& h) {
  if (!is_map(g) || !is_map(h))
    throw std::invalid_argument("reflects_map: g and h must be maps");
  if (!find_iso(compose_spans(f, g), h))
    throw std::invalid_argument("reflects_map: gF is not isomorphic to h");
  return is_map(f);
}

}  // namespace spancat
