#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhag {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GroupElem = std::int64_t;
using Perm = std::vector<int>;

// Group backends: explicit multiplication table, permutation group closed from
// generators, or the infinite cyclic group Z. Elements of the finite backends
// are indices 0..n-1 (index 0 is the identity); elements of Z are integers.
//
// Permutations compose right-to-left: (s t)(x) = s(t(x)).
class Group {
 public:
  enum class Kind { Table, Perm, Int };

  static std::shared_ptr<const Group> table(std::vector<std::string> names, std::vector<std::vector<GroupElem>> mul);
  static std::shared_ptr<const Group> perm(int degree, std::vector<Perm> generators, std::size_t max_order = 100000);
  static std::shared_ptr<const Group> integers();
  static std::shared_ptr<const Group> cyclic(int n);
  static std::shared_ptr<const Group> symmetric(int degree);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ != Kind::Int; }
  std::size_t order() const { return names_.size(); }  // 0 for Z
  const std::vector<GroupElem>& elements() const { return elements_; }
  bool abelian() const;

  GroupElem identity() const { return 0; }
  bool contains(GroupElem g) const { return kind_ == Kind::Int || (g >= 0 && g < static_cast<GroupElem>(order())); }
  GroupElem mul(GroupElem a, GroupElem b) const;
  GroupElem inv(GroupElem a) const;
  GroupElem conj(GroupElem g, GroupElem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  const std::vector<GroupElem>& generators() const { return generators_; }
  // Generator word (indices into generators(); negative = inverse) for each element.
  const std::vector<std::vector<int>>& words() const { return words_; }

  std::string name(GroupElem g) const;
  // Table: element name; Perm: cycle notation "(1 2 3)"/"(123)" (1-based) or image list; Int: integer text.
  GroupElem parse(const std::string& text) const;
  GroupElem from_perm(const Perm& p) const;
  const Perm& perm_of(GroupElem g) const { return perms_.at(static_cast<std::size_t>(g)); }

 private:
  Group() = default;
  void check(GroupElem g) const;
  void finish_finite();

  Kind kind_{Kind::Int};
  int degree_{0};
  std::vector<std::string> names_;
  std::vector<std::vector<GroupElem>> table_;
  std::vector<GroupElem> inverse_;
  std::vector<GroupElem> elements_;
  std::vector<GroupElem> generators_;
  std::vector<std::vector<int>> words_;
  std::vector<Perm> perms_;
  std::map<Perm, GroupElem> perm_index_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Group automorphism. Finite backends carry the full image table, so equality
// and composition are extensional; on Z the only automorphisms are ±1.
class Automorphism {
 public:
  enum class Kind { Identity, Inner, Map, Negation };

  static Automorphism identity(GroupPtr g);
  static Automorphism inner(GroupPtr g, GroupElem by);
  static Automorphism negation(GroupPtr g);
  // Images of the backend generators, extended multiplicatively and verified.
  static Automorphism from_generator_images(GroupPtr g, const std::vector<GroupElem>& images);
  // Full image table (finite backends), verified.
  static Automorphism from_table(GroupPtr g, std::vector<GroupElem> images);

  const GroupPtr& group() const { return group_; }
  Kind kind() const { return kind_; }
  std::optional<GroupElem> inner_by() const { return by_; }

  GroupElem apply(GroupElem x) const;
  Automorphism inverse() const;
  bool is_identity() const;

  // (this ∘ rhs)(x) = this(rhs(x))
  Automorphism compose(const Automorphism& rhs) const;

  std::string describe() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b);
  friend std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b);

 private:
  Automorphism() = default;
  static void verify_table(const Group& g, const std::vector<GroupElem>& images);

  GroupPtr group_;
  Kind kind_{Kind::Identity};
  std::optional<GroupElem> by_;
  int sign_{1};                                          // Z only
  std::shared_ptr<const std::vector<GroupElem>> images_;  // finite only
};

inline Automorphism aut_compose(const Automorphism& f, const Automorphism& g) { return f.compose(g); }
inline GroupElem aut_apply(const Automorphism& f, GroupElem x) { return f.apply(x); }
inline Automorphism inner_aut(GroupPtr g, GroupElem by) { return Automorphism::inner(std::move(g), by); }

// Grading group element (α, β) with the twisted product
//   (α,β)*(γ,δ) = (αγ, δγ⁻¹βγ),   (α,β)⁻¹ = (α⁻¹, αβ⁻¹α⁻¹).
// Aut must provide compose(), inverse(), equality and ordering.
template <typename Aut>
struct AutPair {
  Aut alpha;
  Aut beta;

  friend bool operator==(const AutPair& a, const AutPair& b) { return a.alpha == b.alpha && a.beta == b.beta; }
  friend auto operator<=>(const AutPair& a, const AutPair& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
};

template <typename Aut>
AutPair<Aut> aut_pair_mul(const AutPair<Aut>& p, const AutPair<Aut>& q) {
  Aut gamma_inv = q.alpha.inverse();
  return {p.alpha.compose(q.alpha), q.beta.compose(gamma_inv).compose(p.beta).compose(q.alpha)};
}

template <typename Aut>
AutPair<Aut> aut_pair_inv(const AutPair<Aut>& p) {
  Aut ai = p.alpha.inverse();
  return {ai, p.alpha.compose(p.beta.inverse()).compose(ai)};
}

using GroupAutPair = AutPair<Automorphism>;

// All inner automorphisms of a finite group, deduplicated (as AutPair components).
std::vector<Automorphism> inner_automorphisms(const GroupPtr& g);

}  // namespace mhag
