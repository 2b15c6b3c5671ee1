#pragma once

#include <map>
#include <memory>
#include <optional>

#include "mhag/instances.hpp"
#include "mhag/pairing.hpp"

namespace mhag {

// Grading index (α,β) of a crossed component; the automorphisms act on B.
using Grading = AutPair<HopfAut>;

// Deliberate structure corruptions used to confirm that the suites detect errors.
struct Faults {
  bool antipode_sign = false;     // S replaced by −S
  bool drop_r_summand = false;    // R loses the summand indexed by label 0
  bool swap_delta_legs = false;   // Δ^cop(a) replaced by Δ(a) in the graded comultiplication
  bool wrong_pair_twist = false;  // grading product uses γβγ⁻¹ instead of γ⁻¹βγ
  bool wrong_xi = false;          // crossing action uses αγ⁻¹βγ instead of αγ⁻¹β⁻¹γ

  bool any() const { return antipode_sign || drop_r_summand || swap_delta_legs || wrong_pair_twist || wrong_xi; }
};

// Element of A⋈B at some grading: keys (A-label, B-label). kUnit on a leg
// stands for the unit of that leg's multiplier algebra.
using CrossedElem = Elem2;
// Element of (A⋈B_p)⊗(A⋈B_q): keys (a, b, a', b').
using CrossedPair = Elem4;
// Element of a triple tensor of crossed components.
using CrossedTriple = Elem6;

// Finite sum of homogeneous components of D(A,B); zero components are never stored.
using GradedElem = std::map<Grading, CrossedElem>;

inline CrossedElem crossed(Label a, Label b) { return CrossedElem::basis(Key2{a, b}); }

// D(A,B) = ⊕ A⋈B_(α,β) over a pairing ⟨A,B⟩. Every operation is exact; for
// infinite A the comultiplication is only evaluated against covers.
class DoubleAlgebra {
 public:
  explicit DoubleAlgebra(std::shared_ptr<const Pairing> pairing, Faults faults = {});

  const Pairing& pairing() const { return *pairing_; }
  const MhaInstance& a() const { return pairing_->a(); }
  const MhaInstance& b() const { return pairing_->b(); }
  const Faults& faults() const { return faults_; }

  HopfAut identity_aut() const { return HopfAut::identity(pairing_->b_ptr()); }
  Grading unit_grading() const { return {identity_aut(), identity_aut()}; }
  Grading grading_mul(const Grading& p, const Grading& q) const;
  Grading grading_inv(const Grading& p) const { return aut_pair_inv(p); }
  Grading conjugate(const Grading& m, const Grading& p) const;  // m p m⁻¹

  // (a⋈b)(a'⋈b') = a(α(b₁)▶a'◀S⁻¹β(b₃)) ⋈ b₂b'
  CrossedElem mul(const Grading& p, const CrossedElem& x, const CrossedElem& y) const;
  // T(b⊗a') = α(b₁)▶a'◀S⁻¹β(b₃) ⊗ b₂, from B⊗A to A⊗B.
  Elem2 twist(const Grading& p, const Elem2& ba) const;
  // Same map assembled as t1∘t2⁻¹∘τ with t1(a⊗b) = α(b₁)▶a⊗b₂, t2(a⊗b) = a◀β(b₂)⊗b₁.
  Elem2 twist_composite(const Grading& p, const Elem2& ba) const;
  // T⁻¹(a⊗b) = b₂ ⊗ S⁻¹α(b₁)▶a◀β(b₃), from A⊗B to B⊗A.
  Elem2 twist_inv(const Grading& p, const Elem2& ab) const;
  // Σ⟨a₁,b₂⟩(1⋈β⁻¹b₁)(a₂x⋈y) − Σ⟨a₂,αβ⁻¹b₁⟩(a₁⋈β⁻¹b₂)(x⋈y); zero by the commutation rule.
  CrossedElem commutation_residual(const Grading& p, const Elem& a, const Elem& b, const CrossedElem& x) const;

  Scalar counit(const CrossedElem& x) const;
  // Δ_{p,q}(a⋈b) = Σ (a₂⋈γ(b₁)) ⊗ (a₁⋈γ⁻¹βγ(b₂)) for p = (α,β), q = (γ,δ), x at p*q.
  // Right cover: Δ(x)(1⊗y) with y at q. Left cover: (y⊗1)Δ(x) with y at p.
  CrossedPair delta_right(const Grading& p, const Grading& q, const CrossedElem& x, const CrossedElem& y) const;
  CrossedPair delta_left(const Grading& p, const Grading& q, const CrossedElem& x, const CrossedElem& y) const;
  // Uncovered Δ_{p,q}(x); needs a finite comultiplication on A.
  CrossedPair delta(const Grading& p, const Grading& q, const CrossedElem& x) const;
  // Δ̃_{p,q}(x)(1⊗y) = (ξ_{q⁻¹}⊗ι)(Δ_{p,q}(x)(1⊗y)); first leg lands at q⁻¹pq.
  CrossedPair delta_tilde_right(const Grading& p, const Grading& q, const CrossedElem& x, const CrossedElem& y) const;

  // S_p(a⋈b) = T_{p⁻¹}(αβS(b)⊗S⁻¹(a)), landing at p⁻¹.
  CrossedElem antipode(const Grading& p, const CrossedElem& x) const;
  // Σ⟨S⁻¹a₃,α(b₁)⟩⟨S⁻¹a₁,βS(b₃)⟩ S⁻¹(a₂)⋈αβS(b₂); independent of the twist map.
  CrossedElem antipode_expanded(const Grading& p, const CrossedElem& x) const;
  // Inverse of antipode(p, ·): takes y at p⁻¹ back to p.
  CrossedElem antipode_inv(const Grading& p, const CrossedElem& y) const;

  // ξ_m on the component at src: a⋈b ↦ a∘βα⁻¹ ⋈ αγ⁻¹β⁻¹γ(b) for m = (α,β), src = (γ,δ).
  CrossedElem xi(const Grading& m, const Grading& src, const CrossedElem& x) const;

  // Legwise product in (A⋈B_p)⊗(A⋈B_q).
  CrossedPair pair_mul(const Grading& p, const Grading& q, const CrossedPair& x, const CrossedPair& y) const;

  // A-labels j for which y·(e^j⋈c) can be nonzero (y at p); nullopt = unrestricted.
  std::optional<LabelSet> right_candidates(const Grading& p, const CrossedElem& y) const;
  // A-labels j for which (e^j⋈1)·y can be nonzero; nullopt = unrestricted.
  std::optional<LabelSet> left_candidates(const CrossedElem& y) const;

  // Basis of a finite crossed component.
  std::vector<Key2> basis() const;

 private:
  Elem3 delta2_b(Label b) const;

  std::shared_ptr<const Pairing> pairing_;
  Faults faults_;
};

GradedElem graded_mul(const DoubleAlgebra& d, const GradedElem& x, const GradedElem& y);
Scalar graded_counit(const DoubleAlgebra& d, const GradedElem& x);

// Leg i of a tensor key as a crossed basis element.
template <std::size_t N>
LinComb<Key<2>> key_leg(const Key<N>& k, std::size_t i) {
  return LinComb<Key<2>>::basis(Key<2>{k[2 * i], k[2 * i + 1]});
}

// Rank of the joint left (resp. right) multiplication operators on a finite
// component; equal to the dimension exactly when the product is non-degenerate.
struct NondegeneracyRanks {
  std::size_t dim = 0;
  std::size_t left = 0;
  std::size_t right = 0;
};
NondegeneracyRanks nondegeneracy_ranks(const DoubleAlgebra& d, const Grading& p);

// Rank of span{Δ_{p,q}(x)(1⊗y)} and of span{(y⊗1)Δ_{p,q}(x)} against dim(A⋈B)²;
// full rank is the cograded surjectivity axiom.
struct SurjectivityRanks {
  std::size_t dim = 0;
  std::size_t right = 0;
  std::size_t left = 0;
};
SurjectivityRanks surjectivity_ranks(const DoubleAlgebra& d, const Grading& p, const Grading& q);

}  // namespace mhag
