#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhag/lincomb.hpp"

namespace mhag {

class MhaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LabelSet = std::set<Label>;

// Truncation hint for a coproduct. A leg filter lists the labels that can
// survive whatever the caller does next (multiplication by a cover, pairing
// against a finite element). Terms outside it may be dropped; instances with
// finitely supported coproducts are free to ignore the hint.
struct LegFilter {
  std::optional<LabelSet> first;
  std::optional<LabelSet> second;
};

enum class TKind { T1, T2, T3, T4 };

// A regular multiplier Hopf algebra presented on a countable basis of integer
// labels. The sentinel kUnit stands for 1 in M(X): it multiplies as the
// identity, has counit 1, and is fixed by S and S⁻¹.
class MhaInstance {
 public:
  virtual ~MhaInstance() = default;

  virtual std::string name() const = 0;
  virtual bool finite_dimensional() const = 0;
  // Δ of every basis element is a finite sum (true for all finite-dimensional instances).
  virtual bool finite_coproduct() const { return finite_dimensional(); }
  virtual std::vector<Label> basis() const = 0;  // finite-dimensional only
  virtual bool has_label(Label l) const = 0;
  virtual std::string label_name(Label l) const = 0;
  virtual Label parse_label(const std::string& text) const = 0;

  virtual Elem mul_basis(Label x, Label y) const = 0;
  virtual Elem2 coproduct_basis(Label x, const LegFilter& filter) const = 0;
  virtual Scalar counit_basis(Label x) const = 0;
  virtual Elem antipode_basis(Label x) const = 0;
  virtual Elem antipode_inv_basis(Label x) const = 0;
  virtual std::optional<Elem> unit() const = 0;
  // Labels y with y·s or s·y possibly nonzero for some s in S; nullopt = no restriction known.
  virtual std::optional<LabelSet> window(const LabelSet& s) const = 0;
  virtual Elem local_unit(const LabelSet& s) const;

  // Element-level operations; all accept kUnit terms.
  Elem mul(const Elem& x, const Elem& y) const;
  Scalar counit(const Elem& x) const;
  Elem antipode(const Elem& x) const;
  Elem antipode_inv(const Elem& x) const;
  Elem2 coproduct(const Elem& x, const LegFilter& filter = {}) const;
  // Σ x₁⊗x₂⊗x₃, filters on legs 1..3 as above.
  Elem3 coproduct3(const Elem& x, const std::optional<LabelSet>& f1, const std::optional<LabelSet>& f2,
                   const std::optional<LabelSet>& f3) const;
  // Window of the support of x; nullopt if x involves kUnit or the instance has no finite window.
  std::optional<LabelSet> window_of(const Elem& x) const;

  // T1(a⊗b)=Δ(a)(1⊗b), T2(a⊗b)=(a⊗1)Δ(b), T3(a⊗b)=Δ(a)(b⊗1), T4(a⊗b)=(1⊗a)Δ(b).
  Elem2 t_map(TKind kind, const Elem2& x) const;
  Elem2 t_map_inv(TKind kind, const Elem2& x) const;

  Elem basis_elem(Label l) const { return Elem::basis(l); }
  Elem one() const { return Elem::basis(kUnit); }

 protected:
  // Labels whose antipode image can meet the given set (S⁻¹ preimage) and vice versa.
  std::optional<LabelSet> antipode_image(const std::optional<LabelSet>& s, bool inverse) const;
};

using InstancePtr = std::shared_ptr<const MhaInstance>;

std::string elem_str(const MhaInstance& x, const Elem& e);

// Support of a tensor leg as a label set.
template <typename K>
LabelSet leg_labels(const LinComb<K>& x, std::size_t leg) {
  LabelSet s;
  for (const auto& [k, c] : x) s.insert(k[leg]);
  return s;
}

}  // namespace mhag
