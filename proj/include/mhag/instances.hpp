#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhag/groups.hpp"
#include "mhag/mha.hpp"

namespace mhag {

// Field used for the structure constants of an instance: rationals by default,
// F_p when a prime is given.
struct FieldSpec {
  std::optional<std::uint64_t> prime;

  Scalar one() const { return prime ? Scalar::residue(1, *prime) : Scalar(1); }
  Scalar convert(const Scalar& s) const { return prime ? s.in_field(*prime) : s; }
};

// Group algebra KH: basis H, Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹. Unital.
class GroupAlgebra final : public MhaInstance {
 public:
  explicit GroupAlgebra(GroupPtr group, FieldSpec field = {});

  const GroupPtr& group() const { return group_; }

  std::string name() const override;
  bool finite_dimensional() const override { return group_->finite(); }
  bool finite_coproduct() const override { return true; }
  std::vector<Label> basis() const override;
  bool has_label(Label l) const override { return group_->contains(l); }
  std::string label_name(Label l) const override { return group_->name(l); }
  Label parse_label(const std::string& text) const override { return group_->parse(text); }

  Elem mul_basis(Label x, Label y) const override;
  Elem2 coproduct_basis(Label x, const LegFilter& filter) const override;
  Scalar counit_basis(Label x) const override;
  Elem antipode_basis(Label x) const override;
  Elem antipode_inv_basis(Label x) const override;
  std::optional<Elem> unit() const override;
  std::optional<LabelSet> window(const LabelSet& s) const override;

 private:
  GroupPtr group_;
  FieldSpec field_;
};

// Function algebra K(H): basis δ_p, δ_pδ_q = [p=q]δ_p, Δ(δ_p) = Σ_{xy=p} δ_x⊗δ_y,
// ε(δ_p) = [p=e], S(δ_p) = δ_{p⁻¹}. Non-unital when H is infinite; local units
// are finite sums of basis idempotents.
class FunctionAlgebra final : public MhaInstance {
 public:
  // force_filters: honour coproduct filters even when H is finite (lets tests
  // compare the truncated path against the full sum).
  explicit FunctionAlgebra(GroupPtr group, FieldSpec field = {}, bool force_filters = false);

  const GroupPtr& group() const { return group_; }

  std::string name() const override;
  bool finite_dimensional() const override { return group_->finite(); }
  std::vector<Label> basis() const override;
  bool has_label(Label l) const override { return group_->contains(l); }
  std::string label_name(Label l) const override { return "d" + group_->name(l); }
  Label parse_label(const std::string& text) const override;

  Elem mul_basis(Label x, Label y) const override;
  Elem2 coproduct_basis(Label x, const LegFilter& filter) const override;
  Scalar counit_basis(Label x) const override;
  Elem antipode_basis(Label x) const override;
  Elem antipode_inv_basis(Label x) const override;
  std::optional<Elem> unit() const override;
  std::optional<LabelSet> window(const LabelSet& s) const override { return s; }
  Elem local_unit(const LabelSet& s) const override;

 private:
  GroupPtr group_;
  FieldSpec field_;
  bool force_filters_;
};

// Structure constants of a finite-dimensional Hopf algebra on basis 0..n-1.
struct HopfStructure {
  std::vector<std::string> names;
  Elem unit;
  std::vector<std::vector<Elem>> mul;  // mul[i][j] = e_i e_j
  std::vector<Elem2> comul;            // comul[i] = Δ(e_i)
  std::vector<Scalar> counit;
  std::vector<Elem> antipode;
};

// Finite-dimensional Hopf algebra given by structure constants. Every Hopf
// axiom is checked exhaustively at construction; violations throw MhaError
// naming the offending basis elements.
class FiniteDimHopf final : public MhaInstance {
 public:
  enum class Origin { Constants, GroupAlgebra, FunctionAlgebra, Double, DoubleDual, Dual };

  FiniteDimHopf(std::string name, HopfStructure s, Origin origin = Origin::Constants, GroupPtr group = nullptr);

  static std::shared_ptr<const FiniteDimHopf> group_algebra(const GroupPtr& h, FieldSpec field = {});
  // B = D(H): (δ_p⊗h)(δ_q⊗l) = δ_pδ_{hqh⁻¹}⊗hl, Δ(δ_p⊗h) = Σ_s (δ_{s⁻¹p}⊗h)⊗(δ_s⊗h),
  // ε = [p=e], S(δ_p⊗h) = δ_{h⁻¹p⁻¹h}⊗h⁻¹. Label of δ_p⊗h is p·|H| + h.
  // printed_antipode uses δ_{h⁻¹ph}⊗h⁻¹ instead (rejected by validation for nonabelian H).
  static std::shared_ptr<const FiniteDimHopf> drinfeld_double(const GroupPtr& h, FieldSpec field = {},
                                                              bool printed_antipode = false);
  // A paired with D(H): (h⊗δ_p)(l⊗δ_q) = lh⊗δ_pδ_q, Δ(h⊗δ_p) = Σ_t (h⊗δ_t)⊗(t⁻¹ht⊗δ_{t⁻¹p}),
  // ε = [p=e], S(h⊗δ_p) = p⁻¹h⁻¹p⊗δ_{p⁻¹}. Label of h⊗δ_p is h·|H| + p, so that it is
  // the dual basis partner of the D(H) label with the same value.
  static std::shared_ptr<const FiniteDimHopf> drinfeld_double_dual(const GroupPtr& h, FieldSpec field = {});

  // Dual Hopf algebra on the dual basis (same labels): structure constants transposed.
  std::shared_ptr<const FiniteDimHopf> dual(std::string name = "") const;

  const HopfStructure& structure() const { return s_; }
  Origin origin() const { return origin_; }
  const GroupPtr& group() const { return group_; }
  // Label permutation induced by a group automorphism (group algebras and D(H)).
  std::vector<Label> lift_labels(const Automorphism& phi) const;

  std::string name() const override { return name_; }
  bool finite_dimensional() const override { return true; }
  std::vector<Label> basis() const override;
  bool has_label(Label l) const override { return l >= 0 && l < static_cast<Label>(dim()); }
  std::string label_name(Label l) const override;
  Label parse_label(const std::string& text) const override;

  Elem mul_basis(Label x, Label y) const override;
  Elem2 coproduct_basis(Label x, const LegFilter& filter) const override;
  Scalar counit_basis(Label x) const override;
  Elem antipode_basis(Label x) const override;
  Elem antipode_inv_basis(Label x) const override;
  std::optional<Elem> unit() const override { return s_.unit; }
  std::optional<LabelSet> window(const LabelSet& /*s*/) const override { return std::nullopt; }

  std::size_t dim() const { return s_.names.size(); }

 private:
  void check_label(Label l) const;
  void validate();

  std::string name_;
  HopfStructure s_;
  std::vector<Elem> antipode_inv_;
  Origin origin_;
  GroupPtr group_;
};

using FiniteDimPtr = std::shared_ptr<const FiniteDimHopf>;

// Hopf automorphism of an instance B. Group algebras carry the inducing group
// automorphism (labels are group elements, so this works for infinite H);
// finite-dimensional instances carry the image of every basis vector.
class HopfAut {
 public:
  static HopfAut identity(InstancePtr b);
  static HopfAut from_group(InstancePtr b, const Automorphism& phi);
  // Images of the basis vectors; checked to be a bijective Hopf algebra map.
  static HopfAut from_images(InstancePtr b, std::vector<Elem> images, std::string description);

  const InstancePtr& instance() const { return b_; }
  Elem apply(const Elem& x) const;
  Elem apply_label(Label l) const;
  // a ↦ a∘φ on the dual-basis partner of B (pairing ⟨e^i, e_j⟩ = [i=j]).
  Elem transpose(const Elem& a) const;
  // Labels j for which e^j∘φ can meet the given set; nullopt when unrestricted.
  std::optional<LabelSet> transpose_candidates(const std::optional<LabelSet>& targets) const;

  HopfAut inverse() const;
  HopfAut compose(const HopfAut& rhs) const;  // (this ∘ rhs)(x) = this(rhs(x))
  bool is_identity() const;
  const std::string& describe() const { return desc_; }
  const std::string& signature() const { return sig_; }

  friend bool operator==(const HopfAut& a, const HopfAut& b) { return a.sig_ == b.sig_; }
  friend std::strong_ordering operator<=>(const HopfAut& a, const HopfAut& b) { return a.sig_ <=> b.sig_; }

 private:
  HopfAut() = default;
  void finish();

  InstancePtr b_;
  std::optional<Automorphism> group_;
  std::shared_ptr<const std::vector<Elem>> images_;
  std::shared_ptr<const std::vector<Elem>> inv_images_;
  std::string desc_;
  std::string sig_;
};

// Checks the Hopf automorphism identities Δ∘φ = (φ⊗φ)∘Δ, ε∘φ = ε, S∘φ = φ∘S and
// multiplicativity on the given labels; returns a description of the first failure.
std::optional<std::string> check_hopf_automorphism(const MhaInstance& b, const HopfAut& phi,
                                                   const std::vector<Label>& labels);

}  // namespace mhag
