#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhag/mha.hpp"

namespace mhag {

// Dual-basis pairing ⟨A,B⟩: A-label i pairs with B-label j to [i=j]. Every
// provided instance pair (K(H)/KH, dual/finite-dimensional, D(H) and its dual)
// is labelled so that this holds. ⟨1,b⟩ = ε(b), ⟨a,1⟩ = ε(a).
class Pairing {
 public:
  Pairing(InstancePtr a, InstancePtr b);

  const MhaInstance& a() const { return *a_; }
  const MhaInstance& b() const { return *b_; }
  const InstancePtr& a_ptr() const { return a_; }
  const InstancePtr& b_ptr() const { return b_; }

  Scalar pair(const Elem& a, const Elem& b) const;

  Elem b_acts_a(const Elem& b, const Elem& a) const;  // b▶a = Σ⟨a₂,b⟩a₁
  Elem a_by_b(const Elem& a, const Elem& b) const;    // a◀b = Σ⟨a₁,b⟩a₂
  Elem a_acts_b(const Elem& a, const Elem& b) const;  // a▶b = Σ⟨a,b₂⟩b₁
  Elem b_by_a(const Elem& b, const Elem& a) const;    // b◀a = Σ⟨a,b₁⟩b₂
  Elem act_both(const Elem& x, const Elem& a, const Elem& y) const;  // x▶a◀y

  // A-labels j for which x▶e^j◀y can meet the targets. Uses
  // ⟨x▶a◀y, b⟩ = ⟨a, y b x⟩, so the answer is the union of supp(y e_t x).
  std::optional<LabelSet> action_preimage(const Elem& x, const Elem& y,
                                          const std::optional<LabelSet>& targets) const;

  // Canonical multiplier W = Σ_i e_i ⊗ e^i in M(B⊗A) and W⁻¹ = Σ_i S(e_i) ⊗ e^i,
  // applied to elements of B⊗A. Only the finitely many i meeting the A-leg contribute.
  Elem2 w_left(const Elem2& x) const;
  Elem2 w_right(const Elem2& x) const;
  Elem2 w_inv_left(const Elem2& x) const;
  Elem2 w_inv_right(const Elem2& x) const;
  // Labels i with e^i·a or a·e^i possibly nonzero; all labels for finite A.
  std::vector<Label> w_labels(const Elem& a_leg) const;

  // Compatibility on the given labels: ⟨aa',b⟩ = ⟨a⊗a',Δb⟩, ⟨a,bb'⟩ = ⟨Δa,b⊗b'⟩,
  // ⟨S a,b⟩ = ⟨a,S b⟩, units against counits, and non-degeneracy of the basis.
  std::optional<std::string> check(const std::vector<Label>& labels) const;

  // (Δ_B⊗ι)W·(y1⊗y2⊗z) − W¹³W²³·(y1⊗y2⊗z); zero when W is canonical.
  Elem3 w_delta_b_residual(Label y1, Label y2, Label z) const;
  // (ι⊗Δ_A)W·(y⊗z1⊗z2) − W¹²W¹³·(y⊗z1⊗z2).
  Elem3 w_delta_a_residual(Label y, Label z1, Label z2) const;

 private:
  Elem2 w_apply(const Elem2& x, bool left, bool inverse) const;

  InstancePtr a_;
  InstancePtr b_;
};

}  // namespace mhag
