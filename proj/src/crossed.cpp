#include "mhag/crossed.hpp"

#include "mhag/linalg.hpp"

namespace mhag {

namespace {

LabelSet elem_labels(const Elem& x, bool& has_unit) {
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

void merge(std::optional<LabelSet>& acc, bool& unrestricted, const std::optional<LabelSet>& s) {
  if (unrestricted) return;
  if (!s) {
    unrestricted = true;
    acc.reset();
    return;
  }
  if (!acc) acc.emplace();
  acc->insert(s->begin(), s->end());
}

// Σ (first ⊗ second) for every term of a crossed element and a fixed partner.
CrossedPair pair_tensor(const CrossedElem& x, const CrossedElem& y) { return lc_tensor(x, y); }

}  // namespace

DoubleAlgebra::DoubleAlgebra(std::shared_ptr<const Pairing> pairing, Faults faults)
    : pairing_(std::move(pairing)), faults_(faults) {}

Grading DoubleAlgebra::grading_mul(const Grading& p, const Grading& q) const {
  if (!faults_.wrong_pair_twist) return aut_pair_mul(p, q);
  return {p.alpha.compose(q.alpha), q.beta.compose(q.alpha).compose(p.beta).compose(q.alpha.inverse())};
}

Grading DoubleAlgebra::conjugate(const Grading& m, const Grading& p) const {
  return grading_mul(grading_mul(m, p), grading_inv(m));
}

Elem3 DoubleAlgebra::delta2_b(Label b) const {
  return this->b().coproduct3(Elem::basis(b), std::nullopt, std::nullopt, std::nullopt);
}

Elem2 DoubleAlgebra::twist(const Grading& p, const Elem2& ba) const {
  const Pairing& pr = *pairing_;
  Elem2 r;
  for (const auto& [k, c] : ba) {
    const Elem a = Elem::basis(k[1]);
    for (const auto& [t, cb] : delta2_b(k[0])) {
      Elem left = p.alpha.apply_label(t[0]);
      Elem right = this->b().antipode_inv(p.beta.apply_label(t[2]));
      Elem acted = pr.act_both(left, a, right);
      if (!acted.empty()) r.add(lc_tensor(acted, Elem::basis(t[1])), c * cb);
    }
  }
  return r;
}

Elem2 DoubleAlgebra::twist_composite(const Grading& p, const Elem2& ba) const {
  const Pairing& pr = *pairing_;
  // τ then t2⁻¹(a⊗b) = Σ a◀S⁻¹β(b₂) ⊗ b₁
  Elem2 mid;
  for (const auto& [k, c] : ba) {
    const Elem a = Elem::basis(k[1]);
    for (const auto& [uv, cb] : this->b().coproduct(Elem::basis(k[0]))) {
      Elem acted = pr.a_by_b(a, this->b().antipode_inv(p.beta.apply_label(uv[1])));
      mid.add(lc_tensor(acted, Elem::basis(uv[0])), c * cb);
    }
  }
  // t1(a⊗b) = Σ α(b₁)▶a ⊗ b₂
  Elem2 r;
  for (const auto& [k, c] : mid) {
    const Elem a = Elem::basis(k[0]);
    for (const auto& [uv, cb] : this->b().coproduct(Elem::basis(k[1]))) {
      Elem acted = pr.b_acts_a(p.alpha.apply_label(uv[0]), a);
      r.add(lc_tensor(acted, Elem::basis(uv[1])), c * cb);
    }
  }
  return r;
}

Elem2 DoubleAlgebra::twist_inv(const Grading& p, const Elem2& ab) const {
  const Pairing& pr = *pairing_;
  Elem2 r;
  for (const auto& [k, c] : ab) {
    const Elem a = Elem::basis(k[0]);
    for (const auto& [t, cb] : delta2_b(k[1])) {
      Elem left = this->b().antipode_inv(p.alpha.apply_label(t[0]));
      Elem right = p.beta.apply_label(t[2]);
      Elem acted = pr.act_both(left, a, right);
      if (!acted.empty()) r.add(lc_tensor(Elem::basis(t[1]), acted), c * cb);
    }
  }
  return r;
}

CrossedElem DoubleAlgebra::mul(const Grading& p, const CrossedElem& x, const CrossedElem& y) const {
  CrossedElem r;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      Elem2 tw = twist(p, Elem2::basis(Key2{kx[1], ky[0]}));
      for (const auto& [t, ct] : tw) {
        Elem left = a().mul(Elem::basis(kx[0]), Elem::basis(t[0]));
        if (left.empty()) continue;
        Elem right = b().mul(Elem::basis(t[1]), Elem::basis(ky[1]));
        r.add(lc_tensor(left, right), cx * cy * ct);
      }
    }
  }
  return r;
}

CrossedElem DoubleAlgebra::commutation_residual(const Grading& p, const Elem& a, const Elem& b,
                                                const CrossedElem& x) const {
  const HopfAut beta_inv = p.beta.inverse();
  const HopfAut ab_inv = p.alpha.compose(beta_inv);
  CrossedElem lhs;
  CrossedElem rhs;
  for (const auto& [uv, cb] : this->b().coproduct(b)) {
    bool unit = false;
    const Elem b1 = Elem::basis(uv[0]);
    const Elem b2 = Elem::basis(uv[1]);
    // Σ⟨a₁,b₂⟩(1⋈β⁻¹b₁)(a₂x⋈y)
    LabelSet f1 = elem_labels(b2, unit);
    LegFilter fl = unit ? LegFilter{} : LegFilter{f1, std::nullopt};
    const CrossedElem left_b = lc_tensor(Elem::basis(kUnit), beta_inv.apply(b1));
    for (const auto& [a12, ca] : this->a().coproduct(a, fl)) {
      Scalar w = pairing_->pair(Elem::basis(a12[0]), b2);
      if (w.is_zero()) continue;
      CrossedElem ax;
      for (const auto& [kx, cx] : x) ax.add(lc_tensor(this->a().mul(Elem::basis(a12[1]), Elem::basis(kx[0])), Elem::basis(kx[1])), cx);
      lhs.add(mul(p, left_b, ax), cb * ca * w);
    }
    // Σ⟨a₂,αβ⁻¹b₁⟩(a₁⋈β⁻¹b₂)(x⋈y)
    const Elem target = ab_inv.apply(b1);
    LabelSet f2 = elem_labels(target, unit);
    LegFilter fr = unit ? LegFilter{} : LegFilter{std::nullopt, f2};
    for (const auto& [a12, ca] : this->a().coproduct(a, fr)) {
      Scalar w = pairing_->pair(Elem::basis(a12[1]), target);
      if (w.is_zero()) continue;
      rhs.add(mul(p, lc_tensor(Elem::basis(a12[0]), beta_inv.apply(b2)), x), cb * ca * w);
    }
  }
  return lhs - rhs;
}

Scalar DoubleAlgebra::counit(const CrossedElem& x) const {
  Scalar s(0);
  for (const auto& [k, c] : x) s += c * a().counit(Elem::basis(k[0])) * b().counit(Elem::basis(k[1]));
  return s;
}

std::optional<LabelSet> DoubleAlgebra::left_candidates(const CrossedElem& y) const {
  LabelSet s;
  for (const auto& [k, c] : y) {
    if (k[0] == kUnit) return std::nullopt;
    s.insert(k[0]);
  }
  return a().window(s);
}

std::optional<LabelSet> DoubleAlgebra::right_candidates(const Grading& p, const CrossedElem& y) const {
  std::optional<LabelSet> acc = LabelSet{};
  bool unrestricted = false;
  for (const auto& [k, c] : y) {
    if (k[0] == kUnit) return std::nullopt;
    auto targets = a().window(LabelSet{k[0]});
    if (!targets) return std::nullopt;
    for (const auto& [t, cb] : delta2_b(k[1])) {
      Elem x = p.alpha.apply_label(t[0]);
      Elem z = b().antipode_inv(p.beta.apply_label(t[2]));
      merge(acc, unrestricted, pairing_->action_preimage(x, z, targets));
      if (unrestricted) return std::nullopt;
    }
  }
  return acc;
}

CrossedPair DoubleAlgebra::delta_right(const Grading& p, const Grading& q, const CrossedElem& x,
                                       const CrossedElem& y) const {
  const HopfAut right_aut = q.alpha.inverse().compose(p.beta).compose(q.alpha);
  const bool swap = faults_.swap_delta_legs;
  CrossedPair r;
  for (const auto& [kx, cx] : x) {
    for (const auto& [uv, cb] : b().coproduct(Elem::basis(kx[1]))) {
      CrossedElem z = mul(q, lc_tensor(Elem::basis(kUnit), right_aut.apply_label(uv[1])), y);
      if (z.empty()) continue;
      std::optional<LabelSet> w = left_candidates(z);
      LegFilter f = swap ? LegFilter{std::nullopt, w} : LegFilter{w, std::nullopt};
      const CrossedElem lead_b = lc_tensor(Elem::basis(kUnit), q.alpha.apply_label(uv[0]));
      for (const auto& [aa, ca] : a().coproduct(Elem::basis(kx[0]), f)) {
        const Label lead = swap ? aa[0] : aa[1];
        const Label tail = swap ? aa[1] : aa[0];
        CrossedElem first;
        for (const auto& [kb, c1] : lead_b) first.add(Key2{lead, kb[1]}, c1);
        CrossedElem second;
        for (const auto& [kz, cz] : z) {
          second.add(lc_tensor(a().mul(Elem::basis(tail), Elem::basis(kz[0])), Elem::basis(kz[1])), cz);
        }
        r.add(pair_tensor(first, second), cx * cb * ca);
      }
    }
  }
  return r;
}

CrossedPair DoubleAlgebra::delta_left(const Grading& p, const Grading& q, const CrossedElem& x,
                                      const CrossedElem& y) const {
  const HopfAut right_aut = q.alpha.inverse().compose(p.beta).compose(q.alpha);
  const bool swap = faults_.swap_delta_legs;
  const std::optional<LabelSet> cand = right_candidates(p, y);
  const LegFilter f = swap ? LegFilter{cand, std::nullopt} : LegFilter{std::nullopt, cand};
  CrossedPair r;
  for (const auto& [kx, cx] : x) {
    Elem2 da = a().coproduct(Elem::basis(kx[0]), f);
    for (const auto& [uv, cb] : b().coproduct(Elem::basis(kx[1]))) {
      const Elem left_b = q.alpha.apply_label(uv[0]);
      const Elem right_b = right_aut.apply_label(uv[1]);
      for (const auto& [aa, ca] : da) {
        const Label lead = swap ? aa[0] : aa[1];
        const Label tail = swap ? aa[1] : aa[0];
        CrossedElem first = mul(p, y, lc_tensor(Elem::basis(lead), left_b));
        if (first.empty()) continue;
        r.add(pair_tensor(first, lc_tensor(Elem::basis(tail), right_b)), cx * cb * ca);
      }
    }
  }
  return r;
}

CrossedPair DoubleAlgebra::delta(const Grading& p, const Grading& q, const CrossedElem& x) const {
  const HopfAut right_aut = q.alpha.inverse().compose(p.beta).compose(q.alpha);
  const bool swap = faults_.swap_delta_legs;
  CrossedPair r;
  for (const auto& [kx, cx] : x) {
    Elem2 da = a().coproduct(Elem::basis(kx[0]));
    for (const auto& [uv, cb] : b().coproduct(Elem::basis(kx[1]))) {
      const Elem left_b = q.alpha.apply_label(uv[0]);
      const Elem right_b = right_aut.apply_label(uv[1]);
      for (const auto& [aa, ca] : da) {
        const Label lead = swap ? aa[0] : aa[1];
        const Label tail = swap ? aa[1] : aa[0];
        r.add(pair_tensor(lc_tensor(Elem::basis(lead), left_b), lc_tensor(Elem::basis(tail), right_b)), cx * cb * ca);
      }
    }
  }
  return r;
}

CrossedPair DoubleAlgebra::delta_tilde_right(const Grading& p, const Grading& q, const CrossedElem& x,
                                             const CrossedElem& y) const {
  const Grading qi = grading_inv(q);
  CrossedPair r;
  for (const auto& [k, c] : delta_right(p, q, x, y)) {
    CrossedElem first = xi(qi, p, crossed(k[0], k[1]));
    r.add(lc_tensor(first, crossed(k[2], k[3])), c);
  }
  return r;
}

CrossedElem DoubleAlgebra::antipode(const Grading& p, const CrossedElem& x) const {
  const Grading pi = grading_inv(p);
  const HopfAut ab = p.alpha.compose(p.beta);
  Elem2 ba;
  for (const auto& [k, c] : x) {
    ba.add(lc_tensor(ab.apply(b().antipode(Elem::basis(k[1]))), a().antipode_inv(Elem::basis(k[0]))), c);
  }
  CrossedElem r = twist(pi, ba);
  return faults_.antipode_sign ? -r : r;
}

CrossedElem DoubleAlgebra::antipode_expanded(const Grading& p, const CrossedElem& x) const {
  const HopfAut ab = p.alpha.compose(p.beta);
  // A-labels whose S⁻¹ image can pair nontrivially with the given B element.
  auto filter_for = [&](const Elem& target) -> std::optional<LabelSet> {
    bool unit = false;
    LabelSet s = elem_labels(target, unit);
    if (unit) return std::nullopt;
    Elem preimage;
    for (Label t : s) preimage.add(t, Scalar(1));
    LabelSet out;
    for (const auto& [k, c] : a().antipode(preimage)) out.insert(k);
    return out;
  };
  CrossedElem r;
  for (const auto& [k, c] : x) {
    for (const auto& [t, cb] : delta2_b(k[1])) {
      const Elem x1 = p.alpha.apply_label(t[0]);
      const Elem x3 = p.beta.apply(b().antipode(Elem::basis(t[2])));
      const Elem mid = ab.apply(b().antipode(Elem::basis(t[1])));
      for (const auto& [aa, ca] : a().coproduct3(Elem::basis(k[0]), filter_for(x3), std::nullopt, filter_for(x1))) {
        Scalar w = pairing_->pair(a().antipode_inv(Elem::basis(aa[2])), x1);
        if (w.is_zero()) continue;
        w *= pairing_->pair(a().antipode_inv(Elem::basis(aa[0])), x3);
        if (w.is_zero()) continue;
        r.add(lc_tensor(a().antipode_inv(Elem::basis(aa[1])), mid), c * cb * ca * w);
      }
    }
  }
  return r;
}

CrossedElem DoubleAlgebra::antipode_inv(const Grading& p, const CrossedElem& y) const {
  const Grading pi = grading_inv(p);
  const HopfAut ab_inv = p.alpha.compose(p.beta).inverse();
  CrossedElem r;
  for (const auto& [k, c] : twist_inv(pi, y)) {
    r.add(lc_tensor(a().antipode(Elem::basis(k[1])), b().antipode_inv(ab_inv.apply_label(k[0]))), c);
  }
  return faults_.antipode_sign ? -r : r;
}

CrossedElem DoubleAlgebra::xi(const Grading& m, const Grading& src, const CrossedElem& x) const {
  const HopfAut on_a = m.beta.compose(m.alpha.inverse());
  const HopfAut inner = faults_.wrong_xi ? m.beta : m.beta.inverse();
  const HopfAut on_b = m.alpha.compose(src.alpha.inverse()).compose(inner).compose(src.alpha);
  CrossedElem r;
  for (const auto& [k, c] : x) {
    r.add(lc_tensor(on_a.transpose(Elem::basis(k[0])), on_b.apply_label(k[1])), c);
  }
  return r;
}

CrossedPair DoubleAlgebra::pair_mul(const Grading& p, const Grading& q, const CrossedPair& x,
                                    const CrossedPair& y) const {
  CrossedPair r;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      CrossedElem first = mul(p, crossed(kx[0], kx[1]), crossed(ky[0], ky[1]));
      if (first.empty()) continue;
      CrossedElem second = mul(q, crossed(kx[2], kx[3]), crossed(ky[2], ky[3]));
      r.add(lc_tensor(first, second), cx * cy);
    }
  }
  return r;
}

std::vector<Key2> DoubleAlgebra::basis() const {
  std::vector<Key2> out;
  for (Label x : a().basis()) {
    for (Label y : b().basis()) out.push_back(Key2{x, y});
  }
  return out;
}

GradedElem graded_mul(const DoubleAlgebra& d, const GradedElem& x, const GradedElem& y) {
  GradedElem r;
  for (const auto& [g, xv] : x) {
    auto it = y.find(g);
    if (it == y.end()) continue;
    CrossedElem v = d.mul(g, xv, it->second);
    if (!v.empty()) r.emplace(g, std::move(v));
  }
  return r;
}

Scalar graded_counit(const DoubleAlgebra& d, const GradedElem& x) {
  Scalar s(0);
  for (const auto& [g, v] : x) s += d.counit(v);
  return s;
}

NondegeneracyRanks nondegeneracy_ranks(const DoubleAlgebra& d, const Grading& p) {
  const std::vector<Key2> basis = d.basis();
  ColumnIndex<Key4> left_cols;
  ColumnIndex<Key4> right_cols;
  RowEchelon left;
  RowEchelon right;
  for (const Key2& x : basis) {
    Elem4 lrow;
    Elem4 rrow;
    for (const Key2& y : basis) {
      for (const auto& [k, c] : d.mul(p, crossed(y[0], y[1]), crossed(x[0], x[1]))) {
        lrow.add(Key4{y[0], y[1], k[0], k[1]}, c);
      }
      for (const auto& [k, c] : d.mul(p, crossed(x[0], x[1]), crossed(y[0], y[1]))) {
        rrow.add(Key4{y[0], y[1], k[0], k[1]}, c);
      }
    }
    left.insert(left_cols.row(lrow));
    right.insert(right_cols.row(rrow));
  }
  return {basis.size(), left.rank(), right.rank()};
}

SurjectivityRanks surjectivity_ranks(const DoubleAlgebra& d, const Grading& p, const Grading& q) {
  const std::vector<Key2> basis = d.basis();
  ColumnIndex<Key4> cols;
  RowEchelon right;
  RowEchelon left;
  for (const Key2& x : basis) {
    for (const Key2& y : basis) {
      right.insert(cols.row(d.delta_right(p, q, crossed(x[0], x[1]), crossed(y[0], y[1]))));
      left.insert(cols.row(d.delta_left(p, q, crossed(x[0], x[1]), crossed(y[0], y[1]))));
    }
  }
  return {basis.size() * basis.size(), right.rank(), left.rank()};
}

}  // namespace mhag
