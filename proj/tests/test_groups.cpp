#include "doctest.h"
#include "fixtures.hpp"

using namespace mhag;

namespace {
// Independent conjugation by permutation arrays: (σ τ)(i) = σ(τ(i)).
Perm compose_perm(const Perm& s, const Perm& t) {
  Perm r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[static_cast<std::size_t>(t[i])];
  return r;
}
Perm invert_perm(const Perm& s) {
  Perm r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  return r;
}
}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("symmetric group names and products follow right-to-left composition") {
    const auto s3 = Group::symmetric(3);
    CHECK(s3->order() == 6);
    const GroupElem c = s3->parse("(123)"), t = s3->parse("(12)");
    CHECK(s3->parse("(1 2 3)") == c);
    for (GroupElem x : s3->elements()) {
      for (GroupElem y : s3->elements()) {
        CHECK(s3->perm_of(s3->mul(x, y)) == compose_perm(s3->perm_of(x), s3->perm_of(y)));
      }
      CHECK(s3->perm_of(s3->inv(x)) == invert_perm(s3->perm_of(x)));
    }
    CHECK(s3->name(s3->conj(c, t)) == "(23)");
  }

  TEST_CASE("load-time diagnostics") {
    CHECK_THROWS_WITH_AS(Group::perm(3, {{1, 1, 2}}), doctest::Contains("not a permutation"), GroupError);
    CHECK_THROWS_AS(Group::table({"a", "b"}, {{0, 1}, {1, 1}}), GroupError);
    CHECK_THROWS_WITH_AS(Group::perm(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}, {1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}, 1000),
                         doctest::Contains("do not close"), GroupError);
    const auto s3 = Group::symmetric(3);
    CHECK_THROWS_AS(Automorphism::from_table(s3, {0, 0, 0, 0, 0, 0}), GroupError);
    // Transposition to 3-cycle is not a homomorphism.
    CHECK_THROWS_AS(Automorphism::from_generator_images(s3, {s3->parse("(123)"), s3->parse("(123)")}), GroupError);
  }

  TEST_CASE("table group from explicit multiplication") {
    const auto k = Group::table({"e", "a", "b", "c"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    CHECK(k->abelian());
    CHECK(k->mul(k->parse("a"), k->parse("b")) == k->parse("c"));
  }

  TEST_CASE("automorphism application") {
    const auto s3 = Group::symmetric(3);
    const auto z = Group::integers();
    CHECK(Automorphism::identity(s3).apply(3) == 3);
    CHECK(s3->name(Automorphism::inner(s3, s3->parse("(123)")).apply(s3->parse("(12)"))) == "(23)");
    CHECK(Automorphism::negation(z).apply(5) == -5);
  }

  TEST_CASE("composition") {
    const auto s3 = Group::symmetric(3);
    for (GroupElem g : s3->elements()) {
      for (GroupElem h : s3->elements()) {
        const auto ig = Automorphism::inner(s3, g), ih = Automorphism::inner(s3, h);
        CHECK(ig.compose(ih) == Automorphism::inner(s3, s3->mul(g, h)));
        for (GroupElem x : s3->elements()) CHECK(ig.compose(ih).apply(x) == ig.apply(ih.apply(x)));
      }
    }
    const auto z = Group::integers();
    const auto neg = Automorphism::negation(z);
    CHECK(neg.compose(Automorphism::identity(z)) == neg);
    CHECK(neg.compose(neg).is_identity());
  }

  TEST_CASE("inner automorphisms") {
    const auto s3 = Group::symmetric(3);
    CHECK(Automorphism::inner(s3, s3->identity()).is_identity());
    const auto c4 = Group::cyclic(4);
    for (GroupElem g : c4->elements()) CHECK(Automorphism::inner(c4, g).is_identity());
    CHECK(inner_automorphisms(s3).size() == 6);
    CHECK(inner_automorphisms(c4).size() == 1);
  }

  TEST_CASE("grading product and inverse on examples") {
    const auto s3 = Group::symmetric(3);
    const auto a = Automorphism::inner(s3, s3->parse("(12)")), b = Automorphism::inner(s3, s3->parse("(123)"));
    const auto id = Automorphism::identity(s3);
    using P = GroupAutPair;
    CHECK(aut_pair_mul(P{a, id}, P{b, id}) == P{a.compose(b), id});
    CHECK(aut_pair_mul(P{id, a}, P{id, b}) == P{id, b.compose(a)});
    const P p{a, b};
    CHECK(aut_pair_mul(p, P{a.inverse(), a.compose(b.inverse()).compose(a.inverse())}) == P{id, id});
    CHECK(aut_pair_inv(P{id, id}) == P{id, id});
    CHECK(aut_pair_inv(P{b, id}) == P{b.inverse(), id});
    CHECK(aut_pair_inv(P{id, b}) == P{id, b.inverse()});
  }

  TEST_CASE("grading group axioms over all inner pairs") {
    const auto s3 = Group::symmetric(3);
    std::vector<GroupAutPair> all;
    for (const auto& x : inner_automorphisms(s3)) {
      for (const auto& y : inner_automorphisms(s3)) all.push_back({x, y});
    }
    REQUIRE(all.size() == 36);
    const GroupAutPair e{Automorphism::identity(s3), Automorphism::identity(s3)};
    for (const auto& p : all) {
      CHECK(aut_pair_mul(p, e) == p);
      CHECK(aut_pair_mul(e, p) == p);
      CHECK(aut_pair_mul(p, aut_pair_inv(p)) == e);
      CHECK(aut_pair_mul(aut_pair_inv(p), p) == e);
      for (const auto& q : all) {
        for (const auto& r : all) CHECK(aut_pair_mul(aut_pair_mul(p, q), r) == aut_pair_mul(p, aut_pair_mul(q, r)));
      }
    }
  }
}
