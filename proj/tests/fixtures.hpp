#pragma once

#include <memory>
#include <vector>

#include "mhag/crossed.hpp"
#include "mhag/instances.hpp"
#include "mhag/pairing.hpp"

namespace fixtures {

using namespace mhag;

// K(H) paired with KH; basis δ_p⋈g has key (p, g).
struct GroupDouble {
  GroupPtr group;
  std::shared_ptr<const FunctionAlgebra> a;
  std::shared_ptr<const GroupAlgebra> b;
  std::shared_ptr<const Pairing> pairing;
  std::shared_ptr<const DoubleAlgebra> d;

  explicit GroupDouble(GroupPtr h, Faults faults = {}, FieldSpec field = {})
      : group(std::move(h)),
        a(std::make_shared<FunctionAlgebra>(group, field)),
        b(std::make_shared<GroupAlgebra>(group, field)),
        pairing(std::make_shared<Pairing>(a, b)),
        d(std::make_shared<DoubleAlgebra>(pairing, faults)) {}

  HopfAut aut(const Automorphism& phi) const { return HopfAut::from_group(b, phi); }
  Grading grading(const Automorphism& alpha, const Automorphism& beta) const { return {aut(alpha), aut(beta)}; }
  Grading inner(GroupElem x, GroupElem y) const {
    return grading(Automorphism::inner(group, x), Automorphism::inner(group, y));
  }

  // All (inner, inner) pairs.
  std::vector<Grading> inner_gradings() const {
    std::vector<Grading> out;
    for (const auto& x : inner_automorphisms(group)) {
      for (const auto& y : inner_automorphisms(group)) {
        Grading g = grading(x, y);
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
      }
    }
    return out;
  }

  // Identity and negation in both slots.
  std::vector<Grading> sign_gradings() const {
    const Automorphism id = Automorphism::identity(group), neg = Automorphism::negation(group);
    return {grading(id, id), grading(id, neg), grading(neg, id), grading(neg, neg)};
  }
};

// D(H)^ paired with D(H) for a finite group H.
struct DrinfeldDouble {
  GroupPtr group;
  FiniteDimPtr a;
  FiniteDimPtr b;
  std::shared_ptr<const DoubleAlgebra> d;

  explicit DrinfeldDouble(GroupPtr h, Faults faults = {})
      : group(std::move(h)),
        a(FiniteDimHopf::drinfeld_double_dual(group)),
        b(FiniteDimHopf::drinfeld_double(group)),
        d(std::make_shared<DoubleAlgebra>(std::make_shared<Pairing>(a, b), faults)) {}

  Grading inner(GroupElem x, GroupElem y) const {
    return {HopfAut::from_group(b, Automorphism::inner(group, x)), HopfAut::from_group(b, Automorphism::inner(group, y))};
  }
};

// Product of a list of group elements, left to right.
inline GroupElem word(const Group& h, std::initializer_list<GroupElem> xs) {
  GroupElem r = h.identity();
  for (GroupElem x : xs) r = h.mul(r, x);
  return r;
}

}  // namespace fixtures
