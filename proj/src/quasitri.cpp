#include "mhag/quasitri.hpp"

#include <functional>
#include <vector>

namespace mhag {

namespace {

template <std::size_t K>
using Tensor = LinComb<Key<K>>;

template <std::size_t K>
CrossedElem leg_of(const Key<K>& k, std::size_t i) {
  return crossed(k[2 * i], k[2 * i + 1]);
}

// Sum over j of pure tensors acting on two legs of a K/2-fold tensor product,
// identity on the others.
struct Family {
  std::size_t bleg = 0;
  std::size_t aleg = 1;
  std::function<CrossedElem(Label)> b_part;
  std::function<CrossedElem(Label)> a_part;
  std::optional<HopfAut> a_transform;  // a_part(j) = e^j∘φ ⋈ …; candidates go through φ
  bool all_labels = false;
  bool droppable = false;  // subject to the dropped-summand fault
};

std::vector<Label> resolve(const DoubleAlgebra& d, const std::optional<LabelSet>& cands, bool all_labels) {
  if (cands && !all_labels) return {cands->begin(), cands->end()};
  if (!d.a().finite_dimensional()) throw MhaError("R-matrix: summands cannot be bounded for an infinite instance");
  return d.a().basis();
}

template <std::size_t K>
Tensor<K> apply_family(const DoubleAlgebra& d, const Family& f, const std::vector<Grading>& g, Side side,
                       const Tensor<K>& x) {
  Tensor<K> r;
  for (const auto& [k, c] : x) {
    const CrossedElem lb = leg_of(k, f.bleg);
    const CrossedElem la = leg_of(k, f.aleg);
    std::optional<LabelSet> cands = side == Side::Left ? d.left_candidates(la) : d.right_candidates(g[f.aleg], la);
    if (f.a_transform) cands = f.a_transform->transpose_candidates(cands);
    for (Label j : resolve(d, cands, f.all_labels)) {
      if (f.droppable && d.faults().drop_r_summand && j == 0) continue;
      const CrossedElem na = side == Side::Left ? d.mul(g[f.aleg], f.a_part(j), la) : d.mul(g[f.aleg], la, f.a_part(j));
      if (na.empty()) continue;
      const CrossedElem nb = side == Side::Left ? d.mul(g[f.bleg], f.b_part(j), lb) : d.mul(g[f.bleg], lb, f.b_part(j));
      for (const auto& [kb, cb] : nb) {
        for (const auto& [ka, ca] : na) {
          Key<K> out = k;
          out[2 * f.bleg] = kb[0];
          out[2 * f.bleg + 1] = kb[1];
          out[2 * f.aleg] = ka[0];
          out[2 * f.aleg + 1] = ka[1];
          r.add(out, c * cb * ca);
        }
      }
    }
  }
  return r;
}

CrossedElem unit_b(const Elem& b) { return lc_tensor(Elem::basis(kUnit), b); }
CrossedElem unit_a(const Elem& a) { return lc_tensor(a, Elem::basis(kUnit)); }

}  // namespace

namespace {

Family r_family(const DoubleAlgebra& d, RForm form, const Grading& p, std::size_t bleg, std::size_t aleg) {
  Family f;
  f.bleg = bleg;
  f.aleg = aleg;
  const HopfAut beta_inv = p.beta.inverse();
  f.b_part = [beta_inv](Label j) { return unit_b(beta_inv.apply_label(j)); };
  if (form == RForm::Canonical) {
    f.a_part = [](Label j) { return crossed(j, kUnit); };
  } else {
    const MhaInstance* a = &d.a();
    f.a_part = [a](Label j) { return unit_a(a->antipode_inv(Elem::basis(j))); };
    f.all_labels = true;
  }
  f.droppable = true;
  return f;
}

// A-labels j for which Δ(e^j) can meet first-leg labels w1 and second-leg labels w2.
std::optional<LabelSet> coproduct_candidates(const DoubleAlgebra& d, const std::optional<LabelSet>& w1,
                                             const std::optional<LabelSet>& w2) {
  if (!w1 || !w2) return std::nullopt;
  LabelSet out;
  for (Label u : *w1) {
    for (Label v : *w2) {
      for (const auto& [k, c] : d.b().mul(Elem::basis(u), Elem::basis(v))) out.insert(k);
    }
  }
  return out;
}

}  // namespace

CrossedPair RMatrix::apply(const Grading& p, const Grading& q, Side side, const CrossedPair& x) const {
  return apply_family<4>(d_, r_family(d_, form_, p, 0, 1), {p, q}, side, x);
}

Sides<CrossedPair> RMatrix::axiom1(const Grading& m, const Grading& p, const Grading& q, Side side,
                            const CrossedPair& x) const {
  const Grading mp = d_.conjugate(m, p);
  const Grading mq = d_.conjugate(m, q);
  Family base = r_family(d_, form_, p, 0, 1);
  Family f = base;
  const DoubleAlgebra* d = &d_;
  f.b_part = [d, m, p, base](Label j) { return d->xi(m, p, base.b_part(j)); };
  f.a_part = [d, m, q, base](Label j) { return d->xi(m, q, base.a_part(j)); };
  f.a_transform = m.beta.compose(m.alpha.inverse());
  CrossedPair lhs = apply_family<4>(d_, f, {mp, mq}, side, x);
  CrossedPair rhs = apply_family<4>(d_, r_family(d_, form_, mp, 0, 1), {mp, mq}, side, x);
  return {lhs, rhs};
}

Sides<CrossedTriple> RMatrix::axiom2(const Grading& p, const Grading& q, const Grading& r, Side side,
                              const CrossedTriple& x) const {
  const Grading pq = d_.grading_mul(p, q);
  const Family rpq = r_family(d_, form_, pq, 0, 1);
  CrossedTriple lhs;
  for (const auto& [k, c] : x) {
    const CrossedElem u1 = leg_of(k, 0);
    const CrossedElem u2 = leg_of(k, 1);
    const CrossedElem u3 = leg_of(k, 2);
    std::optional<LabelSet> cands = side == Side::Left ? d_.left_candidates(u3) : d_.right_candidates(r, u3);
    for (Label j : resolve(d_, cands, rpq.all_labels)) {
      if (d_.faults().drop_r_summand && j == 0) continue;
      const CrossedElem third = side == Side::Left ? d_.mul(r, rpq.a_part(j), u3) : d_.mul(r, u3, rpq.a_part(j));
      if (third.empty()) continue;
      CrossedPair front;
      if (side == Side::Left) {
        for (const auto& [t, ct] : d_.delta_right(p, q, rpq.b_part(j), u2)) {
          front.add(lc_tensor(d_.mul(p, leg_of(t, 0), u1), leg_of(t, 1)), ct);
        }
      } else {
        for (const auto& [t, ct] : d_.delta_left(p, q, rpq.b_part(j), u1)) {
          front.add(lc_tensor(leg_of(t, 0), d_.mul(q, u2, leg_of(t, 1))), ct);
        }
      }
      lhs.add(lc_tensor(front, third), c);
    }
  }
  const std::vector<Grading> g{p, q, r};
  const Grading qi = d_.grading_inv(q);
  const Grading qrq = d_.conjugate(q, r);
  Family f13 = r_family(d_, form_, p, 0, 2);
  const Family base = f13;
  const DoubleAlgebra* d = &d_;
  f13.a_part = [d, qi, qrq, base](Label j) { return d->xi(qi, qrq, base.a_part(j)); };
  f13.a_transform = qi.beta.compose(qi.alpha.inverse());
  const Family f23 = r_family(d_, form_, q, 1, 2);
  CrossedTriple rhs = side == Side::Left ? apply_family<6>(d_, f13, g, side, apply_family<6>(d_, f23, g, side, x))
                                         : apply_family<6>(d_, f23, g, side, apply_family<6>(d_, f13, g, side, x));
  return {lhs, rhs};
}

Sides<CrossedTriple> RMatrix::axiom3(const Grading& p, const Grading& q, const Grading& r, Side side,
                              const CrossedTriple& x) const {
  const Family rp = r_family(d_, form_, p, 0, 1);
  CrossedTriple lhs;
  for (const auto& [k, c] : x) {
    const CrossedElem u1 = leg_of(k, 0);
    const CrossedElem u2 = leg_of(k, 1);
    const CrossedElem u3 = leg_of(k, 2);
    std::optional<LabelSet> w2 = side == Side::Left ? d_.left_candidates(u2) : d_.right_candidates(q, u2);
    std::optional<LabelSet> w3 = side == Side::Left ? d_.left_candidates(u3) : d_.right_candidates(r, u3);
    for (Label j : resolve(d_, coproduct_candidates(d_, w3, w2), rp.all_labels)) {
      if (d_.faults().drop_r_summand && j == 0) continue;
      const CrossedElem first = side == Side::Left ? d_.mul(p, rp.b_part(j), u1) : d_.mul(p, u1, rp.b_part(j));
      if (first.empty()) continue;
      CrossedPair back;
      if (side == Side::Left) {
        for (const auto& [t, ct] : d_.delta_right(q, r, rp.a_part(j), u3)) {
          back.add(lc_tensor(d_.mul(q, leg_of(t, 0), u2), leg_of(t, 1)), ct);
        }
      } else {
        for (const auto& [t, ct] : d_.delta_left(q, r, rp.a_part(j), u2)) {
          back.add(lc_tensor(leg_of(t, 0), d_.mul(r, u3, leg_of(t, 1))), ct);
        }
      }
      lhs.add(lc_tensor(first, back), c);
    }
  }
  const std::vector<Grading> g{p, q, r};
  const Family f13 = r_family(d_, form_, p, 0, 2);
  const Family f12 = r_family(d_, form_, p, 0, 1);
  CrossedTriple rhs = side == Side::Left ? apply_family<6>(d_, f13, g, side, apply_family<6>(d_, f12, g, side, x))
                                         : apply_family<6>(d_, f12, g, side, apply_family<6>(d_, f13, g, side, x));
  return {lhs, rhs};
}

Sides<CrossedPair> RMatrix::axiom4(const Grading& p, const Grading& q, const CrossedElem& h, Side side,
                            const CrossedPair& v) const {
  const Grading r = d_.conjugate(p, q);
  const Grading pi = d_.grading_inv(p);
  CrossedPair lhs;
  CrossedPair rhs;
  if (side == Side::Left) {
    CrossedPair dv;
    for (const auto& [k, c] : v) {
      for (const auto& [t, ct] : d_.delta_right(p, q, h, leg_of(k, 1))) {
        dv.add(lc_tensor(d_.mul(p, leg_of(t, 0), leg_of(k, 0)), leg_of(t, 1)), c * ct);
      }
    }
    lhs = apply(p, q, side, dv);
    for (const auto& [k, c] : apply(p, q, side, v)) {
      for (const auto& [t, ct] : d_.delta_right(r, p, h, leg_of(k, 0))) {
        CrossedElem moved = d_.mul(q, d_.xi(pi, r, leg_of(t, 0)), leg_of(k, 1));
        rhs.add(lc_tensor(leg_of(t, 1), moved), c * ct);
      }
    }
  } else {
    for (const auto& [k, c] : apply(p, q, side, v)) {
      for (const auto& [t, ct] : d_.delta_left(p, q, h, leg_of(k, 0))) {
        lhs.add(lc_tensor(leg_of(t, 0), d_.mul(q, leg_of(k, 1), leg_of(t, 1))), c * ct);
      }
    }
    CrossedPair vd;
    for (const auto& [k, c] : v) {
      const CrossedElem y = d_.xi(p, q, leg_of(k, 1));
      for (const auto& [t, ct] : d_.delta_left(r, p, h, y)) {
        CrossedElem moved = d_.xi(pi, r, leg_of(t, 0));
        vd.add(lc_tensor(d_.mul(p, leg_of(k, 0), leg_of(t, 1)), moved), c * ct);
      }
    }
    rhs = apply(p, q, side, vd);
  }
  return {lhs, rhs};
}

namespace {

std::vector<Label> window_labels(const DoubleAlgebra& d, const Elem& x) {
  std::optional<LabelSet> w = d.a().window_of(x);
  return resolve(d, w, false);
}

Elem3 with_a_leg(const CrossedElem& x, const Elem& a) { return lc_tensor(x, a); }

CrossedElem a_times(const DoubleAlgebra& d, Label a, const CrossedElem& x, bool left) {
  CrossedElem r;
  for (const auto& [k, c] : x) {
    Elem m = left ? d.a().mul(Elem::basis(a), Elem::basis(k[0])) : d.a().mul(Elem::basis(k[0]), Elem::basis(a));
    r.add(lc_tensor(m, Elem::basis(k[1])), c);
  }
  return r;
}

}  // namespace

Sides<Elem3> lemma_w_cop(const DoubleAlgebra& d, const Grading& p, const Elem& a, Side side, const CrossedElem& x,
                           Label z) {
  const MhaInstance& A = d.a();
  const HopfAut beta_inv = p.beta.inverse();
  const HopfAut phi = p.alpha.compose(beta_inv);
  const Elem ez = Elem::basis(z);
  auto w_leg = [&](Label j) { return unit_b(beta_inv.apply_label(j)); };
  Elem3 lhs;
  Elem3 rhs;
  if (side == Side::Left) {
    // Σ_j (1⋈β⁻¹e_j)(a₂⋈1)x ⊗ e^j a₁ z
    for (const auto& [aa, ca] : A.coproduct(a, LegFilter{A.window(LabelSet{z}), std::nullopt})) {
      const Elem v = A.mul(Elem::basis(aa[0]), ez);
      if (v.empty()) continue;
      const CrossedElem shifted = a_times(d, aa[1], x, true);
      for (Label j : window_labels(d, v)) {
        const Elem w = A.mul(Elem::basis(j), v);
        if (w.empty()) continue;
        lhs.add(with_a_leg(d.mul(p, w_leg(j), shifted), w), ca);
      }
    }
    // Σ (a₁⋈1)(1⋈β⁻¹e_j)x ⊗ (a₂∘αβ⁻¹) e^j z
    for (Label j : window_labels(d, ez)) {
      const Elem v = A.mul(Elem::basis(j), ez);
      if (v.empty()) continue;
      const CrossedElem u = d.mul(p, w_leg(j), x);
      if (u.empty()) continue;
      auto cands = phi.transpose_candidates(A.window_of(v));
      for (const auto& [aa, ca] : A.coproduct(a, LegFilter{std::nullopt, cands})) {
        const Elem w = A.mul(phi.transpose(Elem::basis(aa[1])), v);
        if (w.empty()) continue;
        rhs.add(with_a_leg(a_times(d, aa[0], u, true), w), ca);
      }
    }
  } else {
    // Σ_j x(1⋈β⁻¹e_j)(a₂⋈1) ⊗ z e^j a₁
    for (Label j : window_labels(d, ez)) {
      const Elem u = A.mul(ez, Elem::basis(j));
      if (u.empty()) continue;
      const CrossedElem xj = d.mul(p, x, w_leg(j));
      if (xj.empty()) continue;
      for (const auto& [aa, ca] : A.coproduct(a, LegFilter{A.window_of(u), std::nullopt})) {
        const Elem w = A.mul(u, Elem::basis(aa[0]));
        if (w.empty()) continue;
        lhs.add(with_a_leg(d.mul(p, xj, crossed(aa[1], kUnit)), w), ca);
      }
    }
    // Σ x(a₁⋈1)(1⋈β⁻¹e_j) ⊗ z(a₂∘αβ⁻¹)e^j
    auto cands = phi.transpose_candidates(A.window(LabelSet{z}));
    for (const auto& [aa, ca] : A.coproduct(a, LegFilter{std::nullopt, cands})) {
      const Elem v = A.mul(ez, phi.transpose(Elem::basis(aa[1])));
      if (v.empty()) continue;
      const CrossedElem xa = d.mul(p, x, crossed(aa[0], kUnit));
      if (xa.empty()) continue;
      for (Label j : window_labels(d, v)) {
        const Elem w = A.mul(v, Elem::basis(j));
        if (w.empty()) continue;
        rhs.add(with_a_leg(d.mul(p, xa, w_leg(j)), w), ca);
      }
    }
  }
  return {lhs, rhs};
}

Sides<Elem3> lemma_w_delta(const DoubleAlgebra& d, const Grading& p, const Grading& q, const Elem& b, Side side,
                             Label y, const CrossedElem& x) {
  const MhaInstance& B = d.b();
  const HopfAut beta_inv = p.beta.inverse();
  const HopfAut kappa = q.alpha.inverse().compose(p.beta).compose(q.alpha);
  const HopfAut lambda = beta_inv.compose(q.beta).compose(kappa);
  const Elem ey = Elem::basis(y);
  Elem3 lhs;
  Elem3 rhs;
  const Elem2 db = B.coproduct(b);
  auto cands_left = [&](const CrossedElem& z) { return resolve(d, d.left_candidates(z), false); };
  auto cands_right = [&](const CrossedElem& z) { return resolve(d, d.right_candidates(q, z), false); };
  if (side == Side::Left) {
    // Σ β⁻¹(e_j)γ(b₁)y ⊗ (e^j⋈1)(1⋈κb₂)x
    for (const auto& [bb, cb] : db) {
      const CrossedElem z = d.mul(q, unit_b(kappa.apply_label(bb[1])), x);
      if (z.empty()) continue;
      const Elem gy = B.mul(q.alpha.apply_label(bb[0]), ey);
      for (Label j : cands_left(z)) {
        const CrossedElem second = d.mul(q, crossed(j, kUnit), z);
        if (second.empty()) continue;
        lhs.add(lc_tensor(B.mul(beta_inv.apply_label(j), gy), second), cb);
      }
    }
    // Σ λ(b₂)β⁻¹(e_j)y ⊗ (1⋈κb₁)(e^j⋈1)x
    for (Label j : cands_left(x)) {
      const CrossedElem v = d.mul(q, crossed(j, kUnit), x);
      if (v.empty()) continue;
      const Elem u = B.mul(beta_inv.apply_label(j), ey);
      for (const auto& [bb, cb] : db) {
        rhs.add(lc_tensor(B.mul(lambda.apply_label(bb[1]), u), d.mul(q, unit_b(kappa.apply_label(bb[0])), v)), cb);
      }
    }
  } else {
    // Σ yβ⁻¹(e_j)γ(b₁) ⊗ x(e^j⋈1)(1⋈κb₂)
    for (Label j : cands_right(x)) {
      const CrossedElem v = d.mul(q, x, crossed(j, kUnit));
      if (v.empty()) continue;
      const Elem u = B.mul(ey, beta_inv.apply_label(j));
      for (const auto& [bb, cb] : db) {
        lhs.add(lc_tensor(B.mul(u, q.alpha.apply_label(bb[0])), d.mul(q, v, unit_b(kappa.apply_label(bb[1])))), cb);
      }
    }
    // Σ yλ(b₂)β⁻¹(e_j) ⊗ x(1⋈κb₁)(e^j⋈1)
    for (const auto& [bb, cb] : db) {
      const CrossedElem z = d.mul(q, x, unit_b(kappa.apply_label(bb[0])));
      if (z.empty()) continue;
      const Elem yl = B.mul(ey, lambda.apply_label(bb[1]));
      for (Label j : cands_right(z)) {
        const CrossedElem second = d.mul(q, z, crossed(j, kUnit));
        if (second.empty()) continue;
        rhs.add(lc_tensor(B.mul(yl, beta_inv.apply_label(j)), second), cb);
      }
    }
  }
  return {lhs, rhs};
}

}  // namespace mhag
