#include "mhag/mha.hpp"

#include <sstream>

namespace mhag {

namespace {

LabelSet single(Label l) { return LabelSet{l}; }

}  // namespace

Elem MhaInstance::local_unit(const LabelSet& /*s*/) const {
  if (auto u = unit()) return *u;
  throw MhaError(name() + ": no local units available");
}

Elem MhaInstance::mul(const Elem& x, const Elem& y) const {
  Elem r;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      Scalar c = cx * cy;
      if (kx == kUnit) {
        r.add(ky, c);
      } else if (ky == kUnit) {
        r.add(kx, c);
      } else {
        r.add(mul_basis(kx, ky), c);
      }
    }
  }
  return r;
}

Scalar MhaInstance::counit(const Elem& x) const {
  Scalar s(0);
  for (const auto& [k, c] : x) s += k == kUnit ? c : c * counit_basis(k);
  return s;
}

Elem MhaInstance::antipode(const Elem& x) const {
  Elem r;
  for (const auto& [k, c] : x) {
    if (k == kUnit) {
      r.add(kUnit, c);
    } else {
      r.add(antipode_basis(k), c);
    }
  }
  return r;
}

Elem MhaInstance::antipode_inv(const Elem& x) const {
  Elem r;
  for (const auto& [k, c] : x) {
    if (k == kUnit) {
      r.add(kUnit, c);
    } else {
      r.add(antipode_inv_basis(k), c);
    }
  }
  return r;
}

Elem2 MhaInstance::coproduct(const Elem& x, const LegFilter& filter) const {
  Elem2 r;
  for (const auto& [k, c] : x) {
    if (k == kUnit) {
      r.add(Key2{kUnit, kUnit}, c);
    } else {
      r.add(coproduct_basis(k, filter), c);
    }
  }
  return r;
}

Elem3 MhaInstance::coproduct3(const Elem& x, const std::optional<LabelSet>& f1, const std::optional<LabelSet>& f2,
                              const std::optional<LabelSet>& f3) const {
  Elem3 r;
  for (const auto& [k, c] : x) {
    if (k == kUnit) {
      r.add(Key3{kUnit, kUnit, kUnit}, c);
      continue;
    }
    if (f3 || finite_coproduct() || !f1) {
      // (Δ⊗ι)Δ: the outer filter bounds the middle factor.
      Elem2 outer = coproduct_basis(k, LegFilter{std::nullopt, f3});
      for (const auto& [uv, cu] : outer) {
        Elem2 inner = coproduct_basis(uv[0], LegFilter{f1, f2});
        for (const auto& [ab, ci] : inner) r.add(Key3{ab[0], ab[1], uv[1]}, c * cu * ci);
      }
    } else {
      // (ι⊗Δ)Δ
      Elem2 outer = coproduct_basis(k, LegFilter{f1, std::nullopt});
      for (const auto& [uv, cu] : outer) {
        Elem2 inner = coproduct_basis(uv[1], LegFilter{f2, f3});
        for (const auto& [ab, ci] : inner) r.add(Key3{uv[0], ab[0], ab[1]}, c * cu * ci);
      }
    }
  }
  return r;
}

std::optional<LabelSet> MhaInstance::window_of(const Elem& x) const {
  LabelSet s;
  for (const auto& [k, c] : x) {
    if (k == kUnit) return std::nullopt;
    s.insert(k);
  }
  return window(s);
}

std::optional<LabelSet> MhaInstance::antipode_image(const std::optional<LabelSet>& s, bool inverse) const {
  if (!s) return std::nullopt;
  LabelSet out;
  for (Label l : *s) {
    Elem img = inverse ? antipode_inv_basis(l) : antipode_basis(l);
    for (const auto& [k, c] : img) out.insert(k);
  }
  return out;
}

Elem2 MhaInstance::t_map(TKind kind, const Elem2& x) const {
  Elem2 r;
  for (const auto& [ab, c] : x) {
    const Label a = ab[0];
    const Label b = ab[1];
    const Elem ea = Elem::basis(a);
    const Elem eb = Elem::basis(b);
    std::optional<LabelSet> wa = a == kUnit ? std::nullopt : window(single(a));
    std::optional<LabelSet> wb = b == kUnit ? std::nullopt : window(single(b));
    switch (kind) {
      case TKind::T1:
        for (const auto& [uv, cu] : coproduct(ea, LegFilter{std::nullopt, wb})) {
          r.add(lc_tensor(Elem::basis(uv[0]), mul(Elem::basis(uv[1]), eb)), c * cu);
        }
        break;
      case TKind::T2:
        for (const auto& [uv, cu] : coproduct(eb, LegFilter{wa, std::nullopt})) {
          r.add(lc_tensor(mul(ea, Elem::basis(uv[0])), Elem::basis(uv[1])), c * cu);
        }
        break;
      case TKind::T3:
        for (const auto& [uv, cu] : coproduct(ea, LegFilter{wb, std::nullopt})) {
          r.add(lc_tensor(mul(Elem::basis(uv[0]), eb), Elem::basis(uv[1])), c * cu);
        }
        break;
      case TKind::T4:
        for (const auto& [uv, cu] : coproduct(eb, LegFilter{std::nullopt, wa})) {
          r.add(lc_tensor(Elem::basis(uv[0]), mul(ea, Elem::basis(uv[1]))), c * cu);
        }
        break;
    }
  }
  return r;
}

Elem2 MhaInstance::t_map_inv(TKind kind, const Elem2& x) const {
  Elem2 r;
  for (const auto& [ab, c] : x) {
    const Label a = ab[0];
    const Label b = ab[1];
    const Elem ea = Elem::basis(a);
    const Elem eb = Elem::basis(b);
    std::optional<LabelSet> wa = a == kUnit ? std::nullopt : window(single(a));
    std::optional<LabelSet> wb = b == kUnit ? std::nullopt : window(single(b));
    switch (kind) {
      case TKind::T1:  // Σ a₁ ⊗ S(a₂)b
        for (const auto& [uv, cu] : coproduct(ea, LegFilter{std::nullopt, antipode_image(wb, true)})) {
          r.add(lc_tensor(Elem::basis(uv[0]), mul(antipode(Elem::basis(uv[1])), eb)), c * cu);
        }
        break;
      case TKind::T2:  // Σ aS(b₁) ⊗ b₂
        for (const auto& [uv, cu] : coproduct(eb, LegFilter{antipode_image(wa, true), std::nullopt})) {
          r.add(lc_tensor(mul(ea, antipode(Elem::basis(uv[0]))), Elem::basis(uv[1])), c * cu);
        }
        break;
      case TKind::T3:  // Σ b₂ ⊗ S⁻¹(b₁)a
        for (const auto& [uv, cu] : coproduct(eb, LegFilter{antipode_image(wa, false), std::nullopt})) {
          r.add(lc_tensor(Elem::basis(uv[1]), mul(antipode_inv(Elem::basis(uv[0])), ea)), c * cu);
        }
        break;
      case TKind::T4:  // Σ bS⁻¹(a₂) ⊗ a₁
        for (const auto& [uv, cu] : coproduct(ea, LegFilter{std::nullopt, antipode_image(wb, false)})) {
          r.add(lc_tensor(mul(eb, antipode_inv(Elem::basis(uv[1]))), Elem::basis(uv[0])), c * cu);
        }
        break;
    }
  }
  return r;
}

std::string elem_str(const MhaInstance& x, const Elem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c << "*";
    os << (k == kUnit ? std::string("1") : x.label_name(k));
  }
  return os.str();
}

}  // namespace mhag
