#include "spancat/local.hpp"

#include <stdexcept>

namespace spancat {

LocalProduct local_product(const Span& r, const Span& s) {
  if (r.src() != s.src() || r.tgt() != s.tgt())
    throw std::invalid_argument("local_product: boundary mismatch");
  FiniteFunction fr = pair_fn(r.left, r.right);  // apex(R) -> X x A
  FiniteFunction fs = pair_fn(s.left, s.right);
  Pullback pb = pullback(fr, fs);
  Span prod(compose_fn(pb.into_left, r.left),
            compose_fn(pb.into_left, r.right));
  SpanMorphism pi(prod, r, pb.into_left);
  SpanMorphism rho(prod, s, pb.into_right);
  return LocalProduct{std::move(prod), std::move(pi), std::move(rho)};
}

Span local_terminal(const FiniteSet& x, const FiniteSet& a) {
  ProductSet p = product(x, a);
  return Span(p.proj1, p.proj2);
}

SpanMorphism to_local_terminal(const Span& r) {
  Span top = local_terminal(r.src(), r.tgt());
  return SpanMorphism(r, top, pair_fn(r.left, r.right));
}

SpanMorphism local_pair(const LocalProduct& lp, const SpanMorphism& to_r,
                        const SpanMorphism& to_s) {
  if (!(to_r.source == to_s.source) || !(to_r.target == lp.pi.target) ||
      !(to_s.target == lp.rho.target))
    throw std::invalid_argument("local_pair: boundary mismatch");
  FiniteFunction fr = pair_fn(lp.pi.target.left, lp.pi.target.right);
  FiniteFunction fs = pair_fn(lp.rho.target.left, lp.rho.target.right);
  Pullback pb = pullback(fr, fs);
  return SpanMorphism(to_r.source, lp.product, mediate(pb, to_r.map, to_s.map));
}

Span local_product_via_tensor(const Span& r, const Span& s) {
  if (r.src() != s.src() || r.tgt() != s.tgt())
    throw std::invalid_argument("local_product_via_tensor: boundary mismatch");
  Span dx = map_from_function(pair_fn(identity_fn(r.src()), identity_fn(r.src())));
  Span da = map_from_function(pair_fn(identity_fn(r.tgt()), identity_fn(r.tgt())));
  return compose_spans(compose_spans(dx, tensor(r, s)), opposite(da));
}

bool is_subterminal(const Span& r, int max_test_apex) {
  if (max_test_apex < 0) max_test_apex = r.apex().size + 2;
  if (max_test_apex < 1) return true;
  // A test span with apex k is a k-tuple of boundary pairs (x, a) and its
  // 2-cell count into R is the product of the fiber sizes at those pairs.
  // More than one 2-cell exists for some test span iff some fiber of
  // <left, right> has at least two elements.
  std::vector<int> fiber(static_cast<size_t>(r.src().size * r.tgt().size), 0);
  for (int e = 0; e < r.apex().size; ++e) {
    int idx = pair_encode(r.left(e), r.right(e), r.tgt().size);
    if (++fiber[static_cast<size_t>(idx)] > 1) return false;
  }
  return true;
}

}  // namespace spancat
