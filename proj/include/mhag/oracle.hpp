#pragma once

#include <functional>
#include <optional>

#include "mhag/crossed.hpp"

namespace mhag {

// Printed closed forms for two concrete families, used as an external
// reference against the generic construction.
namespace closed_form {

using GroupMap = std::function<GroupElem(GroupElem)>;

// K(H)⋈KH at grading (α,β); basis element δ_p⋈g has key (p, g).
struct GroupGrading {
  GroupMap alpha;
  GroupMap beta;
  GroupMap alpha_inv;
  GroupMap beta_inv;
};

// Reads the group automorphisms off a grading over a group algebra instance.
GroupGrading group_grading(const Grading& p);

// (δ_p⋈g)(δ_q⋈h) = [p = β(g) q α(g)⁻¹] δ_p⋈gh
CrossedElem group_product(const Group& h, const GroupGrading& p, Key2 x, Key2 y);
// Δ_{p,q}(δ_x⋈h)(1⊗y) from Σ_s δ_{s⁻¹x}⋈γ(h) ⊗ δ_s⋈γ⁻¹βγ(h), second leg multiplied at q.
CrossedPair group_delta_right(const Group& h, const GroupGrading& p, const GroupGrading& q, Key2 x, Key2 y);
Scalar group_counit(const Group& h, Key2 x);
// S(δ_p⋈h) = δ_{α(h⁻¹) p⁻¹ β(h)} ⋈ αβ(h⁻¹)
CrossedElem group_antipode(const Group& h, const GroupGrading& p, Key2 x);

// D(H)^⋈D(H) at an inner grading (conjugation by a, by b). A-key l·n+q is l⊗δ_q,
// B-key p·n+h is δ_p⊗h.
// (1⋈(δ_p⊗h))((l⊗δ_q)⋈1) as printed.
CrossedElem double_twist(const Group& h, GroupElem a, GroupElem b, Label b_key, Label a_key);
// S((l⊗δ_q)⋈(δ_p⊗h)) as printed.
CrossedElem double_antipode(const Group& h, GroupElem a, GroupElem b, Key2 x);

// Element c with φ(x) = cxc⁻¹ on the group part of a lifted automorphism, if any.
std::optional<GroupElem> inner_element(const Group& h, const HopfAut& phi);

}  // namespace closed_form

}  // namespace mhag
