#include "mhag/oracle.hpp"

#include <initializer_list>

namespace mhag::closed_form {

namespace {

GroupMap label_map(const HopfAut& phi) {
  return [phi](GroupElem g) {
    const Elem img = phi.apply_label(g);
    if (img.size() != 1) throw MhaError("closed form: automorphism is not a group automorphism");
    return img.begin()->first;
  };
}

GroupElem word(const Group& h, std::initializer_list<GroupElem> xs) {
  GroupElem r = h.identity();
  for (GroupElem x : xs) r = h.mul(r, x);
  return r;
}

}  // namespace

GroupGrading group_grading(const Grading& p) {
  return {label_map(p.alpha), label_map(p.beta), label_map(p.alpha.inverse()), label_map(p.beta.inverse())};
}

CrossedElem group_product(const Group& h, const GroupGrading& p, Key2 x, Key2 y) {
  const GroupElem g = x[1];
  if (x[0] != word(h, {p.beta(g), y[0], h.inv(p.alpha(g))})) return {};
  return crossed(x[0], h.mul(g, y[1]));
}

CrossedPair group_delta_right(const Group& h, const GroupGrading& p, const GroupGrading& q, Key2 x, Key2 y) {
  const GroupElem first_b = q.alpha(x[1]);
  const GroupElem second_b = q.alpha_inv(p.beta(q.alpha(x[1])));
  // (δ_s⋈κh)(δ_y⋈k) at q pins s.
  const GroupElem s = word(h, {q.beta(second_b), y[0], h.inv(q.alpha(second_b))});
  CrossedElem second = group_product(h, q, Key2{s, second_b}, y);
  return lc_tensor(crossed(h.mul(h.inv(s), x[0]), first_b), second);
}

Scalar group_counit(const Group& h, Key2 x) { return Scalar(x[0] == h.identity() ? 1 : 0); }

CrossedElem group_antipode(const Group& h, const GroupGrading& p, Key2 x) {
  const GroupElem hi = h.inv(x[1]);
  return crossed(word(h, {p.alpha(hi), h.inv(x[0]), p.beta(x[1])}), p.alpha(p.beta(hi)));
}

CrossedElem double_twist(const Group& h, GroupElem a, GroupElem b, Label b_key, Label a_key) {
  const auto n = static_cast<Label>(h.order());
  const GroupElem p = b_key / n, g = b_key % n, l = a_key / n, q = a_key % n;
  const GroupElem ai = h.inv(a), bi = h.inv(b), gi = h.inv(g);
  const GroupElem new_l = word(h, {b, g, bi, l, b, gi, bi});
  const GroupElem new_q = word(h, {b, g, bi, q, a, gi, ai});
  const GroupElem new_p = word(h, {ai, h.inv(l), a, p, g, bi, l, gi});
  return crossed(new_l * n + new_q, new_p * n + g);
}

CrossedElem double_antipode(const Group& h, GroupElem a, GroupElem b, Key2 x) {
  const auto n = static_cast<Label>(h.order());
  const GroupElem l = x[0] / n, q = x[0] % n, p = x[1] / n, g = x[1] % n;
  const GroupElem ai = h.inv(a), bi = h.inv(b), gi = h.inv(g), qi = h.inv(q);
  const GroupElem new_l = word(h, {a, gi, ai, qi, l, q, a, g, ai});
  const GroupElem new_q = word(h, {a, gi, ai, qi, b, g, bi});
  const GroupElem new_p = word(h, {a, qi, h.inv(l), q, b, gi, p, ai, qi, l, q, a, b, g, bi, ai});
  const GroupElem new_g = word(h, {a, b, gi, bi, ai});
  return crossed(new_l * n + new_q, new_p * n + new_g);
}

std::optional<GroupElem> inner_element(const Group& h, const HopfAut& phi) {
  for (GroupElem c : h.elements()) {
    bool ok = true;
    for (GroupElem x : h.elements()) {
      const Elem img = phi.apply_label(x);
      if (img.size() != 1 || img.begin()->first != h.conj(c, x)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace mhag::closed_form
