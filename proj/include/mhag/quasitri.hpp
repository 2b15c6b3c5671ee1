#pragma once

#include "mhag/crossed.hpp"

namespace mhag {

enum class Side { Left, Right };

// Both evaluated sides of an identity; it holds when they are equal.
template <class T>
struct Sides {
  T lhs;
  T rhs;
  bool holds() const { return lhs == rhs; }
  T residual() const { return lhs - rhs; }
};  // Left: M·X, Right: X·M

// Which dual-basis expression is used for R_{p,q}.
//   Canonical: Σ_j (1⋈β⁻¹(e_j)) ⊗ (e^j⋈1), i.e. (β⁻¹⊗ι)(W) embedded.
//   Literal:   Σ_j (1⋈β⁻¹(e_j)) ⊗ (S⁻¹(e^j)⋈1), the finite-dimensional display
//              with an extra antipode on the dual leg (finite A only).
enum class RForm { Canonical, Literal };

// Generalized R-matrix of D(A,B), applied lazily: only the summands meeting
// the test element are expanded.
class RMatrix {
 public:
  explicit RMatrix(const DoubleAlgebra& d, RForm form = RForm::Canonical) : d_(d), form_(form) {}

  const DoubleAlgebra& algebra() const { return d_; }
  RForm form() const { return form_; }

  // R_{p,q} applied to x in (A⋈B_p)⊗(A⋈B_q).
  CrossedPair apply(const Grading& p, const Grading& q, Side side, const CrossedPair& x) const;

  // Quasitriangularity checks in applied form.
  // (1) (ξ_m⊗ξ_m)R_{p,q} − R_{mpm⁻¹,mqm⁻¹}, tested on x at (mpm⁻¹, mqm⁻¹).
  Sides<CrossedPair> axiom1(const Grading& m, const Grading& p, const Grading& q, Side side, const CrossedPair& x) const;
  // (2) (Δ_{p,q}⊗ι)R_{pq,r} − ((ι⊗ξ_{q⁻¹})R_{p,qrq⁻¹})₁₃(R_{q,r})₂₃, x at (p,q,r).
  Sides<CrossedTriple> axiom2(const Grading& p, const Grading& q, const Grading& r, Side side,
                       const CrossedTriple& x) const;
  // (3) (ι⊗Δ_{q,r})R_{p,qr} − (R_{p,r})₁₃(R_{p,q})₁₂, x at (p,q,r).
  Sides<CrossedTriple> axiom3(const Grading& p, const Grading& q, const Grading& r, Side side,
                       const CrossedTriple& x) const;
  // (4) R_{p,q}Δ_{p,q}(h) − (Δ̃_{pqp⁻¹,p})^cop(h)R_{p,q} for h at pq, applied to v at (p,q).
  Sides<CrossedPair> axiom4(const Grading& p, const Grading& q, const CrossedElem& h, Side side, const CrossedPair& v) const;

 private:
  const DoubleAlgebra& d_;
  RForm form_;
};

// Lemma identities. First identity, in M(A⋈B_p ⊗ A), applied to x⊗z:
//   (β⁻¹⊗ι)(W)Δ^cop(a) − (Δ(a)∘(ι⊗αβ⁻¹))(β⁻¹⊗ι)(W).
Sides<Elem3> lemma_w_cop(const DoubleAlgebra& d, const Grading& p, const Elem& a, Side side,
                           const CrossedElem& x, Label z);
// Second identity, in M(B ⊗ A⋈B_q), applied to y⊗x, with p = (α,β), q = (γ,δ):
//   (β⁻¹⊗ι)(W)(γ⊗γ⁻¹βγ)Δ(b) − (β⁻¹δγ⁻¹βγ⊗γ⁻¹βγ)Δ^cop(b)(β⁻¹⊗ι)(W).
Sides<Elem3> lemma_w_delta(const DoubleAlgebra& d, const Grading& p, const Grading& q, const Elem& b, Side side,
                             Label y, const CrossedElem& x);

}  // namespace mhag
