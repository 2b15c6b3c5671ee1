#include "mhag/pairing.hpp"

namespace mhag {

namespace {

LabelSet plain_labels(const Elem& x, bool& has_unit) {
  LabelSet s;
  has_unit = false;
  for (const auto& [k, c] : x) {
    if (k == kUnit) {
      has_unit = true;
    } else {
      s.insert(k);
    }
  }
  return s;
}

}  // namespace

Pairing::Pairing(InstancePtr a, InstancePtr b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_->finite_dimensional() != b_->finite_dimensional()) {
    throw MhaError("pairing: " + a_->name() + " and " + b_->name() + " differ in finiteness");
  }
  if (a_->finite_dimensional() && a_->basis() != b_->basis()) {
    throw MhaError("pairing: " + a_->name() + " and " + b_->name() + " are not dual-basis labelled");
  }
  if (!b_->finite_coproduct()) throw MhaError("pairing: the right-hand instance needs a finite comultiplication");
}

Scalar Pairing::pair(const Elem& a, const Elem& b) const {
  Scalar s(0);
  for (const auto& [ka, ca] : a) {
    if (ka == kUnit) {
      s += ca * b_->counit(b);
      continue;
    }
    for (const auto& [kb, cb] : b) {
      if (kb == kUnit) {
        s += ca * cb * a_->counit_basis(ka);
      } else if (kb == ka) {
        s += ca * cb;
      }
    }
  }
  return s;
}

Elem Pairing::b_acts_a(const Elem& b, const Elem& a) const {
  bool unit = false;
  LabelSet sb = plain_labels(b, unit);
  const Scalar cu = b.coeff(kUnit);
  Elem r;
  for (const auto& [ka, ca] : a) {
    if (ka == kUnit) {
      r.add(kUnit, ca * b_->counit(b));
      continue;
    }
    if (unit) r.add(ka, ca * cu);
    if (sb.empty()) continue;
    for (const auto& [uv, c] : a_->coproduct_basis(ka, LegFilter{std::nullopt, sb})) {
      r.add(uv[0], ca * c * b.coeff(uv[1]));
    }
  }
  return r;
}

Elem Pairing::a_by_b(const Elem& a, const Elem& b) const {
  bool unit = false;
  LabelSet sb = plain_labels(b, unit);
  const Scalar cu = b.coeff(kUnit);
  Elem r;
  for (const auto& [ka, ca] : a) {
    if (ka == kUnit) {
      r.add(kUnit, ca * b_->counit(b));
      continue;
    }
    if (unit) r.add(ka, ca * cu);
    if (sb.empty()) continue;
    for (const auto& [uv, c] : a_->coproduct_basis(ka, LegFilter{sb, std::nullopt})) {
      r.add(uv[1], ca * c * b.coeff(uv[0]));
    }
  }
  return r;
}

Elem Pairing::a_acts_b(const Elem& a, const Elem& b) const {
  bool unit = false;
  LabelSet sa = plain_labels(a, unit);
  const Scalar cu = a.coeff(kUnit);
  Elem r;
  for (const auto& [kb, cb] : b) {
    if (kb == kUnit) {
      r.add(kUnit, cb * a_->counit(a));
      continue;
    }
    if (unit) r.add(kb, cb * cu);
    if (sa.empty()) continue;
    for (const auto& [uv, c] : b_->coproduct_basis(kb, LegFilter{std::nullopt, sa})) {
      r.add(uv[0], cb * c * a.coeff(uv[1]));
    }
  }
  return r;
}

Elem Pairing::b_by_a(const Elem& b, const Elem& a) const {
  bool unit = false;
  LabelSet sa = plain_labels(a, unit);
  const Scalar cu = a.coeff(kUnit);
  Elem r;
  for (const auto& [kb, cb] : b) {
    if (kb == kUnit) {
      r.add(kUnit, cb * a_->counit(a));
      continue;
    }
    if (unit) r.add(kb, cb * cu);
    if (sa.empty()) continue;
    for (const auto& [uv, c] : b_->coproduct_basis(kb, LegFilter{sa, std::nullopt})) {
      r.add(uv[1], cb * c * a.coeff(uv[0]));
    }
  }
  return r;
}

Elem Pairing::act_both(const Elem& x, const Elem& a, const Elem& y) const { return b_acts_a(x, a_by_b(a, y)); }

std::optional<LabelSet> Pairing::action_preimage(const Elem& x, const Elem& y,
                                                 const std::optional<LabelSet>& targets) const {
  if (!targets) return std::nullopt;
  LabelSet out;
  for (Label t : *targets) {
    if (!b_->has_label(t)) continue;
    for (const auto& [k, c] : b_->mul(b_->mul(y, Elem::basis(t)), x)) {
      if (k != kUnit) out.insert(k);
    }
  }
  return out;
}

std::vector<Label> Pairing::w_labels(const Elem& a_leg) const {
  if (a_->finite_dimensional()) return a_->basis();
  auto w = a_->window_of(a_leg);
  if (!w) throw MhaError("canonical multiplier: " + a_->name() + " leg needs a finite cover");
  return {w->begin(), w->end()};
}

Elem2 Pairing::w_apply(const Elem2& x, bool left, bool inverse) const {
  Elem2 r;
  for (const auto& [k, c] : x) {
    const Elem y = Elem::basis(k[0]);
    const Elem z = Elem::basis(k[1]);
    for (Label i : w_labels(z)) {
      Elem ei = inverse ? b_->antipode(Elem::basis(i)) : Elem::basis(i);
      Elem dual = Elem::basis(i);
      Elem lb = left ? b_->mul(ei, y) : b_->mul(y, ei);
      Elem la = left ? a_->mul(dual, z) : a_->mul(z, dual);
      if (!lb.empty() && !la.empty()) r.add(lc_tensor(lb, la), c);
    }
  }
  return r;
}

Elem2 Pairing::w_left(const Elem2& x) const { return w_apply(x, true, false); }
Elem2 Pairing::w_right(const Elem2& x) const { return w_apply(x, false, false); }
Elem2 Pairing::w_inv_left(const Elem2& x) const { return w_apply(x, true, true); }
Elem2 Pairing::w_inv_right(const Elem2& x) const { return w_apply(x, false, true); }

std::optional<std::string> Pairing::check(const std::vector<Label>& labels) const {
  auto nm = [&](Label l) { return a_->label_name(l) + "/" + b_->label_name(l); };
  for (Label x : labels) {
    if (!a_->has_label(x) || !b_->has_label(x)) return "label " + std::to_string(x) + " has no dual partner";
    Elem ex = Elem::basis(x);
    for (Label y : labels) {
      Elem ey = Elem::basis(y);
      if (pair(a_->antipode(ex), ey) != pair(ex, b_->antipode(ey))) {
        return "<S a,b> != <a,S b> at (" + nm(x) + "," + nm(y) + ")";
      }
      Elem2 db = b_->coproduct(ex);
      for (Label z : labels) {
        Elem ez = Elem::basis(z);
        if (pair(a_->mul(ey, ez), ex) != db.coeff(Key2{y, z})) {
          return "<aa',b> != <a(x)a',Db> at (" + nm(y) + "," + nm(z) + "," + nm(x) + ")";
        }
        Elem2 dz = a_->coproduct(ez, LegFilter{LabelSet{x}, LabelSet{y}});
        if (pair(ez, b_->mul(ex, ey)) != dz.coeff(Key2{x, y})) {
          return "<a,bb'> != <Da,b(x)b'> at (" + nm(z) + "," + nm(x) + "," + nm(y) + ")";
        }
      }
    }
    if (auto u = b_->unit(); u && pair(ex, *u) != a_->counit(ex)) return "<a,1> != eps(a) at " + nm(x);
    if (auto u = a_->unit(); u && pair(*u, ex) != b_->counit(ex)) return "<1,b> != eps(b) at " + nm(x);
  }
  return std::nullopt;
}

Elem3 Pairing::w_delta_b_residual(Label y1, Label y2, Label z) const {
  const Elem ez = Elem::basis(z);
  Elem3 lhs;
  for (Label i : w_labels(ez)) {
    Elem za = a_->mul(Elem::basis(i), ez);
    if (za.empty()) continue;
    for (const auto& [uv, c] : b_->coproduct(Elem::basis(i))) {
      Elem l1 = b_->mul(Elem::basis(uv[0]), Elem::basis(y1));
      Elem l2 = b_->mul(Elem::basis(uv[1]), Elem::basis(y2));
      lhs.add(lc_tensor(lc_tensor(l1, l2), za), c);
    }
  }
  // W²³ first, then W¹³ on the outer legs.
  Elem3 rhs;
  for (const auto& [k, c] : w_left(Elem2::basis(Key2{y2, z}))) {
    for (const auto& [k2, c2] : w_left(Elem2::basis(Key2{y1, k[1]}))) rhs.add(Key3{k2[0], k[0], k2[1]}, c * c2);
  }
  return lhs - rhs;
}

Elem3 Pairing::w_delta_a_residual(Label y, Label z1, Label z2) const {
  const Elem ey = Elem::basis(y);
  std::vector<Label> cands;
  if (a_->finite_dimensional()) {
    cands = a_->basis();
  } else {
    LabelSet s;
    for (Label u : w_labels(Elem::basis(z1))) {
      for (Label v : w_labels(Elem::basis(z2))) {
        for (const auto& [k, c] : b_->mul(Elem::basis(u), Elem::basis(v))) s.insert(k);
      }
    }
    cands.assign(s.begin(), s.end());
  }
  Elem3 lhs;
  for (Label i : cands) {
    Elem yb = b_->mul(Elem::basis(i), ey);
    LegFilter f{a_->window(LabelSet{z1}), a_->window(LabelSet{z2})};
    for (const auto& [uv, c] : a_->coproduct(Elem::basis(i), f)) {
      Elem l1 = a_->mul(Elem::basis(uv[0]), Elem::basis(z1));
      Elem l2 = a_->mul(Elem::basis(uv[1]), Elem::basis(z2));
      lhs.add(lc_tensor(yb, lc_tensor(l1, l2)), c);
    }
  }
  // W¹³ first, then W¹² on the first two legs.
  Elem3 rhs;
  for (const auto& [k, c] : w_left(Elem2::basis(Key2{y, z2}))) {
    for (const auto& [k2, c2] : w_left(Elem2::basis(Key2{k[0], z1}))) rhs.add(Key3{k2[0], k2[1], k[1]}, c * c2);
  }
  return lhs - rhs;
}

}  // namespace mhag
