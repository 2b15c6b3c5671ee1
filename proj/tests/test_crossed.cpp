#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace mhag;
using fixtures::DrinfeldDouble;
using fixtures::GroupDouble;

namespace {
CrossedElem c(Label a, Label b) { return crossed(a, b); }
Elem e(Label l) { return Elem::basis(l); }
Elem2 ba(Label b, Label a) { return Elem2::basis({b, a}); }

oracles::GroupPair automorphisms_of(const GroupDouble& g, GroupElem x, GroupElem y) {
  return {Automorphism::inner(g.group, x), Automorphism::inner(g.group, y)};
}
}  // namespace

TEST_SUITE("crossed") {
  TEST_CASE("products on Z") {
    const GroupDouble z(Group::integers());
    const auto id = Automorphism::identity(z.group), neg = Automorphism::negation(z.group);
    const Grading triv = z.grading(id, id), nb = z.grading(id, neg);
    for (Label p = -3; p <= 3; ++p) {
      for (Label q = -3; q <= 3; ++q) {
        CHECK(z.d->mul(triv, c(p, 2), c(q, -1)) == (p == q ? c(p, 1) : CrossedElem{}));
      }
    }
    CHECK(z.d->mul(nb, c(1, 2), c(5, 3)) == c(1, 5));
    CHECK(z.d->mul(nb, c(1, 2), c(4, 3)).empty());
  }

  TEST_CASE("products on S3") {
    const GroupDouble s(Group::symmetric(3));
    const auto& h = *s.group;
    const Grading triv = s.inner(0, 0);
    const GroupElem c3 = h.parse("(123)");
    for (GroupElem k : h.elements()) {
      CHECK(s.d->mul(triv, c(h.parse("(23)"), c3), c(h.parse("(12)"), k)) == c(h.parse("(23)"), h.mul(c3, k)));
    }
  }

  TEST_CASE("twist map examples and roundtrip") {
    const GroupDouble z(Group::integers());
    const auto id = Automorphism::identity(z.group), neg = Automorphism::negation(z.group);
    for (const Grading& g : z.sign_gradings()) {
      for (Label b = -3; b <= 3; ++b) {
        for (Label q = -3; q <= 3; ++q) {
          const Elem2 t = z.d->twist(g, ba(b, q));
          CHECK(z.d->twist_inv(g, t) == ba(b, q));
          CHECK(z.d->twist_composite(g, ba(b, q)) == t);
        }
      }
    }
    for (Label g = -3; g <= 3; ++g) {
      for (Label q = -3; q <= 3; ++q) {
        CHECK(z.d->twist(z.grading(id, id), ba(g, q)) == Elem2::basis({q, g}));
        CHECK(z.d->twist(z.grading(id, neg), ba(g, q)) == Elem2::basis({q - 2 * g, g}));
      }
    }
  }

  TEST_CASE("embedded factors") {
    const GroupDouble z(Group::integers());
    const Grading g = z.sign_gradings()[1];
    for (Label p = -2; p <= 2; ++p) {
      for (Label q = -2; q <= 2; ++q) {
        CHECK(z.d->mul(g, c(p, kUnit), c(q, 3)) == (p == q ? c(p, 3) : CrossedElem{}));
        const CrossedElem lhs = z.d->mul(g, z.d->mul(g, c(p, kUnit), c(q, kUnit)), c(1, 0));
        CHECK(lhs == z.d->mul(g, c(p, kUnit), z.d->mul(g, c(q, kUnit), c(1, 0))));
      }
      // 1⋈g acts by the crossed product
      CHECK(z.d->mul(g, c(kUnit, 2), c(p, 1)) == z.d->mul(g, c(p - 2 * 2, 2), c(p, 1)));
    }
  }

  TEST_CASE("commutation residual vanishes") {
    const GroupDouble z(Group::integers());
    for (const Grading& g : z.sign_gradings()) {
      for (Label p = -2; p <= 2; ++p) {
        for (Label h = -2; h <= 2; ++h) CHECK(z.d->commutation_residual(g, e(p), e(h), c(1, -1)).empty());
      }
      CHECK(z.d->commutation_residual(g, Elem{}, e(1), c(1, 1)).empty());
    }
    const GroupDouble s(Group::symmetric(3));
    const Grading g = s.inner(s.group->parse("(12)"), s.group->parse("(123)"));
    for (Label a : s.a->basis()) {
      for (Label b : s.b->basis()) CHECK(s.d->commutation_residual(g, e(a), e(b), c(a, 0)).empty());
    }
  }

  TEST_CASE("associativity and non-degeneracy on Z/4 and S3") {
    for (const auto& h : {Group::cyclic(4), Group::symmetric(3)}) {
      const GroupDouble s(h);
      const auto basis = s.d->basis();
      const auto gradings = s.inner_gradings();
      for (std::size_t gi = 0; gi < std::min<std::size_t>(gradings.size(), 2); ++gi) {
        const Grading& g = gradings[gi == 0 ? 0 : gradings.size() - 1];
        for (const Key2& x : basis) {
          for (const Key2& y : basis) {
            const CrossedElem xy = s.d->mul(g, CrossedElem::basis(x), CrossedElem::basis(y));
            for (const Key2& z : basis) {
              CHECK(s.d->mul(g, xy, CrossedElem::basis(z)) ==
                    s.d->mul(g, CrossedElem::basis(x), s.d->mul(g, CrossedElem::basis(y), CrossedElem::basis(z))));
            }
          }
        }
        const auto r = nondegeneracy_ranks(*s.d, g);
        CHECK(r.dim == basis.size());
        CHECK(r.left == r.dim);
        CHECK(r.right == r.dim);
      }
    }
  }

  TEST_CASE("group closed forms on S3") {
    const GroupDouble s(Group::symmetric(3));
    const auto& h = *s.group;
    const auto basis = s.d->basis();
    const std::vector<std::pair<GroupElem, GroupElem>> pairs{{0, 0}, {h.parse("(12)"), h.parse("(123)")},
                                                             {h.parse("(123)"), h.parse("(12)")}};
    for (const auto& [x, y] : pairs) {
      const Grading g = s.inner(x, y);
      const auto gp = automorphisms_of(s, x, y);
      for (const Key2& u : basis) {
        CHECK(s.d->counit(CrossedElem::basis(u)) == oracles::group_counit(h, u));
        CHECK(s.d->antipode(g, CrossedElem::basis(u)) == oracles::group_antipode(h, gp, u));
        for (const Key2& v : basis) {
          CHECK(s.d->mul(g, CrossedElem::basis(u), CrossedElem::basis(v)) == oracles::group_mul(h, gp, u, v));
        }
      }
      for (const auto& [x2, y2] : pairs) {
        const Grading q = s.inner(x2, y2);
        const auto gq = automorphisms_of(s, x2, y2);
        for (const Key2& u : basis) {
          for (const Key2& v : basis) {
            CHECK(s.d->delta_right(g, q, CrossedElem::basis(u), CrossedElem::basis(v)) ==
                  oracles::group_delta_right(h, gp, gq, u, v));
          }
        }
      }
    }
  }

  TEST_CASE("group closed forms on Z with negation") {
    const GroupDouble z(Group::integers());
    const auto& h = *z.group;
    const auto id = Automorphism::identity(z.group), neg = Automorphism::negation(z.group);
    const std::vector<oracles::GroupPair> autos{{id, id}, {id, neg}, {neg, id}, {neg, neg}};
    const auto gradings = z.sign_gradings();
    for (std::size_t i = 0; i < 4; ++i) {
      for (Label p = -3; p <= 3; ++p) {
        for (Label g = -3; g <= 3; ++g) {
          CHECK(z.d->antipode(gradings[i], c(p, g)) == oracles::group_antipode(h, autos[i], {p, g}));
          for (std::size_t j = 0; j < 4; ++j) {
            CHECK(z.d->delta_right(gradings[i], gradings[j], c(p, g), c(g - 1, p)) ==
                  oracles::group_delta_right(h, autos[i], autos[j], {p, g}, {g - 1, p}));
          }
          for (Label q = -3; q <= 3; ++q) {
            CHECK(z.d->mul(gradings[i], c(p, g), c(q, 1)) == oracles::group_mul(h, autos[i], {p, g}, {q, 1}));
          }
        }
      }
    }
  }

  TEST_CASE("Drinfeld double twist and antipode against the hand-derived forms") {
    const DrinfeldDouble dd(Group::symmetric(3));
    const auto& h = *dd.group;
    const Label n = static_cast<Label>(h.order());
    for (GroupElem a : {h.parse("()"), h.parse("(12)"), h.parse("(123)")}) {
      for (GroupElem b : {h.parse("()"), h.parse("(13)"), h.parse("(132)")}) {
        const Grading g = dd.inner(a, b);
        for (Label bk = 0; bk < n * n; ++bk) {
          for (Label ak = 0; ak < n * n; ak += 5) {
            CHECK(dd.d->twist(g, ba(bk, ak)) == Elem2::basis(oracles::double_twist(h, {a, b}, bk, ak)));
            CHECK(dd.d->antipode(g, c(ak, bk)) == CrossedElem::basis(oracles::double_antipode(h, {a, b}, {ak, bk})));
          }
        }
      }
    }
  }
}

TEST_SUITE("cograded") {
  TEST_CASE("graded products vanish across gradings") {
    const GroupDouble s(Group::symmetric(3));
    const Grading p = s.inner(0, 0), q = s.inner(s.group->parse("(12)"), 0);
    const GradedElem x{{p, c(0, 1)}}, y{{q, c(0, 1)}}, xp{{p, c(0, 2)}};
    CHECK(graded_mul(*s.d, x, y).empty());
    REQUIRE_FALSE(s.d->mul(p, c(0, 1), c(0, 2)).empty());
    CHECK(graded_mul(*s.d, x, xp) == GradedElem{{p, s.d->mul(p, c(0, 1), c(0, 2))}});
    GradedElem sum{{p, c(0, 1)}, {q, c(3, 3)}};
    const GradedElem prod = graded_mul(*s.d, sum, GradedElem{{p, c(3, 0)}});
    CHECK(prod.size() <= 1);
    if (!prod.empty()) CHECK(prod.begin()->first == p);
    CHECK(prod == graded_mul(*s.d, x, GradedElem{{p, c(3, 0)}}));
  }

  TEST_CASE("comultiplication examples") {
    const GroupDouble z(Group::integers());
    const Grading t = z.sign_gradings()[0];
    CHECK(z.d->delta_right(t, t, c(5, 2), c(3, 0)) == lc_tensor(c(2, 2), c(3, 2)));
    const GroupDouble z2(Group::cyclic(2));
    const Grading t2 = z2.inner(0, 0);
    for (Label u : {0, 1}) {
      CrossedPair expect;
      for (Label s = 0; s < 2; ++s) expect.add(lc_tensor(c(z2.group->mul(z2.group->inv(s), u), u), c(s, u)), 1);
      CHECK(z2.d->delta(t2, t2, c(u, u)) == expect);
    }
  }

  TEST_CASE("counit") {
    const GroupDouble z(Group::integers());
    CHECK(z.d->counit(c(0, 0)) == Scalar(1));
    CHECK(z.d->counit(c(5, 4)) == Scalar(0));
    CHECK(z.d->counit(c(0, 0).scaled(2) + c(1, 3).scaled(7)) == Scalar(2));
  }

  TEST_CASE("antipode examples and roundtrip") {
    const GroupDouble s(Group::symmetric(3));
    const auto& h = *s.group;
    const Grading t = s.inner(0, 0);
    CHECK(s.d->antipode(t, c(h.parse("(12)"), h.parse("(123)"))) == c(h.parse("(13)"), h.parse("(132)")));
    const GroupDouble z(Group::integers());
    const Grading tz = z.sign_gradings()[0];
    for (Label p = -3; p <= 3; ++p) {
      for (Label g = -3; g <= 3; ++g) {
        CHECK(z.d->antipode(tz, c(p, g)) == c(-p, -g));
        for (const Grading& g2 : z.sign_gradings()) CHECK(z.d->antipode_inv(g2, z.d->antipode(g2, c(p, g))) == c(p, g));
      }
    }
  }

  TEST_CASE("crossing action examples") {
    const GroupDouble z(Group::integers());
    const auto gs = z.sign_gradings();
    for (Label p = -3; p <= 3; ++p) {
      for (Label h = -3; h <= 3; ++h) {
        for (const Grading& g : gs) CHECK(z.d->xi(gs[0], g, c(p, h)) == c(p, h));
        CHECK(z.d->xi(gs[1], gs[0], c(p, h)) == c(-p, -h));
        for (const Grading& m : gs) {
          for (const Grading& m2 : gs) {
            const Grading src = gs[2];
            const Grading mid = z.d->conjugate(m2, src);
            CHECK(z.d->xi(m, mid, z.d->xi(m2, src, c(p, h))) == z.d->xi(z.d->grading_mul(m, m2), src, c(p, h)));
          }
        }
      }
    }
  }

  TEST_CASE("crossed comultiplication") {
    const GroupDouble z(Group::integers());
    const auto gs = z.sign_gradings();
    for (Label p = -2; p <= 2; ++p) {
      CHECK(z.d->delta_tilde_right(gs[0], gs[0], c(p, 1), c(0, 0)) == z.d->delta_right(gs[0], gs[0], c(p, 1), c(0, 0)));
      CHECK(z.d->delta_tilde_right(gs[0], gs[1], CrossedElem{}, c(0, 0)).empty());
      // First leg is ξ_{q⁻¹} applied to the plain comultiplication.
      const CrossedPair plain = z.d->delta_right(gs[0], gs[1], c(p, 1), c(1, 0));
      CrossedPair expect;
      for (const auto& [k, co] : plain) {
        expect.add(lc_tensor(z.d->xi(z.d->grading_inv(gs[1]), gs[0], crossed(k[0], k[1])), crossed(k[2], k[3])), co);
      }
      CHECK(z.d->delta_tilde_right(gs[0], gs[1], c(p, 1), c(1, 0)) == expect);
    }
  }
}
