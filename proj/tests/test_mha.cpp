#include "doctest.h"
#include "fixtures.hpp"

using namespace mhag;
using fixtures::word;

namespace {
Elem e(Label l, Scalar c = 1) { return Elem::basis(l, c); }
Elem2 e2(Label x, Label y) { return Elem2::basis({x, y}); }

// Hopf structure of K(Z/2) with basis {1, g}.
HopfStructure cyclic2_structure() {
  HopfStructure s;
  s.names = {"1", "g"};
  s.unit = e(0);
  s.mul = {{e(0), e(1)}, {e(1), e(0)}};
  s.comul = {e2(0, 0), e2(1, 1)};
  s.counit = {1, 1};
  s.antipode = {e(0), e(1)};
  return s;
}
}  // namespace

TEST_SUITE("instances") {
  TEST_CASE("function algebra on Z") {
    const FunctionAlgebra kz(Group::integers());
    CHECK(kz.mul(e(3), e(3)) == e(3));
    CHECK(kz.mul(e(3), e(4)).empty());
    CHECK(kz.counit(e(0)) == Scalar(1));
    CHECK(kz.counit(e(5)) == Scalar(0));
    CHECK(kz.counit(e(0, 2) + e(5, 3)) == Scalar(2));
    CHECK(kz.local_unit({3, 7}) == e(3) + e(7));
    CHECK(kz.local_unit({}).empty());
  }

  TEST_CASE("T-maps on Z") {
    const auto z = Group::integers();
    const FunctionAlgebra kz(z);
    const GroupAlgebra cz(z);
    CHECK(cz.t_map(TKind::T1, e2(2, 5)) == e2(2, 7));
    CHECK(cz.t_map_inv(TKind::T1, e2(2, 7)) == e2(2, 5));
    for (Label p = -4; p <= 4; ++p) {
      for (Label q = -4; q <= 4; ++q) {
        CHECK(kz.t_map(TKind::T1, e2(p, q)) == e2(p - q, q));
        CHECK(kz.t_map(TKind::T2, e2(p, q)) == e2(p, q - p));
        CHECK(kz.t_map_inv(TKind::T1, e2(p, q)) == e2(p + q, q));
        for (TKind k : {TKind::T1, TKind::T2, TKind::T3, TKind::T4}) {
          CHECK(kz.t_map_inv(k, kz.t_map(k, e2(p, q))) == e2(p, q));
          CHECK(kz.t_map(k, kz.t_map_inv(k, e2(p, q))) == e2(p, q));
          CHECK(cz.t_map_inv(k, cz.t_map(k, e2(p, q))) == e2(p, q));
        }
      }
    }
  }

  TEST_CASE("antipodes") {
    const auto z = Group::integers();
    CHECK(GroupAlgebra(z).antipode(e(4)) == e(-4));
    const auto s3 = Group::symmetric(3);
    const FunctionAlgebra ks3(s3);
    CHECK(ks3.antipode(e(s3->parse("(123)"))) == e(s3->parse("(132)")));
  }

  TEST_CASE("Drinfeld double of S3: product and antipode") {
    const auto s3 = Group::symmetric(3);
    const auto dd = FiniteDimHopf::drinfeld_double(s3);
    const Label n = static_cast<Label>(s3->order());
    const GroupElem t = s3->parse("(12)"), c = s3->parse("(123)");
    const GroupElem q = word(*s3, {s3->inv(c), t, c});
    CHECK(s3->name(q) == "(13)");
    CHECK(dd->mul(e(t * n + c), e(q * n + s3->identity())) == e(t * n + c));
    // δ_p⊗h ↦ δ_{h⁻¹p⁻¹h}⊗h⁻¹
    const GroupElem p2 = word(*s3, {s3->inv(c), s3->inv(t), c});
    CHECK(s3->name(p2) == "(13)");
    CHECK(dd->antipode(e(t * n + c)) == e(p2 * n + s3->inv(c)));
    for (Label x : dd->basis()) CHECK(dd->antipode_inv(dd->antipode(e(x))) == e(x));
  }

  TEST_CASE("structure constants are validated at load") {
    CHECK_NOTHROW(FiniteDimHopf("K(Z/2)", cyclic2_structure()));

    HopfStructure bad = cyclic2_structure();
    bad.comul[1] = e2(1, 1) + e2(0, 1);
    CHECK_THROWS_WITH_AS(FiniteDimHopf("bad", bad), doctest::Contains("not coassociative at g, basis triple"), MhaError);

    bad = cyclic2_structure();
    bad.mul[1][1] = e(1);
    CHECK_THROWS_AS(FiniteDimHopf("bad", bad), MhaError);

    bad = cyclic2_structure();
    bad.antipode[1] = e(1, -1);
    CHECK_THROWS_AS(FiniteDimHopf("bad", bad), MhaError);

    bad = cyclic2_structure();
    bad.counit[1] = 0;
    CHECK_THROWS_AS(FiniteDimHopf("bad", bad), MhaError);
  }

  TEST_CASE("axioms of provided finite instances") {
    const auto s3 = Group::symmetric(3);
    for (const InstancePtr& x : std::vector<InstancePtr>{std::make_shared<FunctionAlgebra>(s3),
                                                         std::make_shared<GroupAlgebra>(s3),
                                                         FiniteDimHopf::drinfeld_double(s3)}) {
      CAPTURE(x->name());
      const auto basis = x->basis();
      for (Label a : basis) {
        CHECK(x->antipode(x->antipode_inv(e(a))) == e(a));
        for (Label b : basis) {
          CHECK(x->counit(x->mul(e(a), e(b))) == x->counit(e(a)) * x->counit(e(b)));
          CHECK(x->antipode(x->mul(e(a), e(b))) == x->mul(x->antipode(e(b)), x->antipode(e(a))));
        }
      }
    }
  }

  TEST_CASE("automorphisms commute with the structure maps") {
    const auto s3 = Group::symmetric(3);
    const auto dd = FiniteDimHopf::drinfeld_double(s3);
    const HopfAut phi = HopfAut::from_group(dd, Automorphism::inner(s3, s3->parse("(123)")));
    for (Label x : dd->basis()) {
      const Elem fx = phi.apply(e(x));
      CHECK(dd->counit(fx) == dd->counit(e(x)));
      CHECK(dd->antipode(fx) == phi.apply(dd->antipode(e(x))));
      const Elem2 lhs = dd->coproduct(fx);
      Elem2 rhs;
      for (const auto& [k, c] : dd->coproduct(e(x))) rhs.add(lc_tensor(phi.apply(e(k[0])), phi.apply(e(k[1]))), c);
      CHECK(lhs == rhs);
      CHECK(phi.inverse().apply(fx) == e(x));
    }
  }
}

TEST_SUITE("pairing") {
  TEST_CASE("dual-basis evaluation on Z") {
    const auto z = Group::integers();
    const Pairing p(std::make_shared<FunctionAlgebra>(z), std::make_shared<GroupAlgebra>(z));
    CHECK(p.pair(e(5), e(5)) == Scalar(1));
    CHECK(p.pair(e(5), e(3)) == Scalar(0));
    for (Label g = -3; g <= 3; ++g) {
      for (Label q = -3; q <= 3; ++q) {
        CHECK(p.b_acts_a(e(g), e(q)) == e(q - g));
        CHECK(p.a_by_b(e(q), e(g)) == e(q - g));
        CHECK(p.a_acts_b(e(q), e(g)) == (q == g ? e(g) : Elem{}));
      }
    }
  }

  TEST_CASE("antipode is self-adjoint on S3") {
    const auto s3 = Group::symmetric(3);
    const auto a = std::make_shared<FunctionAlgebra>(s3);
    const auto b = std::make_shared<GroupAlgebra>(s3);
    const Pairing p(a, b);
    const GroupElem c = s3->parse("(123)"), ci = s3->parse("(132)");
    CHECK(p.pair(a->antipode(e(c)), e(c)) == Scalar(0));
    CHECK(p.pair(e(c), b->antipode(e(c))) == Scalar(0));
    CHECK(p.pair(a->antipode(e(ci)), e(c)) == Scalar(1));
    CHECK(p.pair(e(ci), b->antipode(e(c))) == Scalar(1));
    for (Label x : a->basis()) {
      for (Label y : b->basis()) CHECK(p.pair(a->antipode(e(x)), e(y)) == p.pair(e(x), b->antipode(e(y))));
    }
    CHECK_FALSE(p.check(a->basis()).has_value());
  }

  TEST_CASE("module axioms of the actions") {
    const auto s3 = Group::symmetric(3);
    const auto dd = FiniteDimHopf::drinfeld_double(s3);
    const auto ddual = FiniteDimHopf::drinfeld_double_dual(s3);
    const Pairing p(ddual, dd);
    CHECK_FALSE(p.check(dd->basis()).has_value());
    for (Label b1 = 0; b1 < 36; b1 += 5) {
      for (Label b2 = 1; b2 < 36; b2 += 7) {
        for (Label a = 0; a < 36; a += 3) {
          const Elem bb = dd->mul(e(b1), e(b2));
          CHECK(p.b_acts_a(bb, e(a)) == p.b_acts_a(e(b1), p.b_acts_a(e(b2), e(a))));
          CHECK(p.a_by_b(e(a), bb) == p.a_by_b(p.a_by_b(e(a), e(b1)), e(b2)));
        }
      }
    }
  }

  TEST_CASE("canonical multiplier on Z") {
    const auto z = Group::integers();
    const Pairing p(std::make_shared<FunctionAlgebra>(z), std::make_shared<GroupAlgebra>(z));
    for (Label q = -3; q <= 3; ++q) {
      CHECK(p.w_left(e2(0, q)) == e2(q, q));
      CHECK(p.w_inv_left(p.w_left(e2(2, q))) == e2(2, q));
      CHECK(p.w_right(p.w_inv_right(e2(-1, q))) == e2(-1, q));
    }
    for (Label y1 = -2; y1 <= 2; ++y1) {
      for (Label y2 = -2; y2 <= 2; ++y2) {
        for (Label zz = -2; zz <= 2; ++zz) {
          CHECK(p.w_delta_b_residual(y1, y2, zz).empty());
          CHECK(p.w_delta_a_residual(y1, y2, zz).empty());
        }
      }
    }
  }

  TEST_CASE("canonical multiplier on a finite-dimensional pairing") {
    const auto s3 = Group::symmetric(3);
    const auto b = FiniteDimHopf::group_algebra(s3);
    const auto a = b->dual();
    const Pairing p(a, b);
    for (Label j : a->basis()) {
      // W(1⊗e^j) = Σ_i e_i⊗e^i e^j
      Elem2 expect;
      for (Label i : b->basis()) expect.add(lc_tensor(e(i), a->mul(e(i), e(j))), Scalar(1));
      CHECK(p.w_left(e2(kUnit, j)) == expect);
    }
  }
}
