#include <map>

#include "mhag/oracle.hpp"
#include "suite_cases.hpp"

namespace mhag {

using detail::Cases;
using detail::compare;
using detail::shower;
using detail::Tuple;

namespace {

CrossedElem el(const Key2& k) { return CrossedElem::basis(k); }

template <class F>
AxiomReport check_all(const DoubleAlgebra& d, const SuiteConfig& cfg, const std::string& name, std::size_t ng,
                      std::size_t nx, std::size_t nc, F&& body) {
  Cases cases(d, cfg, name, ng, nx, nc);
  return run_cases(name, cases.size(), [&](std::size_t i) { return body(cases, cases.at(i)); });
}

// Checks both applications of a two-sided identity; the left one is reported first.
template <class T, class F>
std::optional<Json> both_sides(const Cases& cs, const Tuple& t, const std::function<std::string(const T&)>& show,
                               F&& sides) {
  for (Side s : {Side::Left, Side::Right}) {
    const Sides<T> r = sides(s);
    if (auto bad = compare<T>(cs, t, r.lhs, r.rhs, show, s == Side::Left ? "left" : "right")) return bad;
  }
  return std::nullopt;
}

}  // namespace

SuiteReport crossing_suite(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  SuiteReport out;
  out.push_back(check_all(d, cfg, "xi target grading", 2, 0, 0, [&](const Cases& cs, const Tuple& t) {
    const auto& m = t.g[0];
    const auto& p = t.g[1];
    // (α,β) acting on (γ,δ) lands at (αγα⁻¹, αβ⁻¹δγ⁻¹βγα⁻¹).
    const HopfAut ai = m.alpha.inverse();
    const Grading expected{m.alpha.compose(p.alpha).compose(ai),
                           m.alpha.compose(m.beta.inverse())
                               .compose(p.beta)
                               .compose(p.alpha.inverse())
                               .compose(m.beta)
                               .compose(p.alpha)
                               .compose(ai)};
    const Grading got = d.conjugate(m, p);
    if (got == expected) return std::optional<Json>{};
    Json j = cs.describe(t);
    j["lhs"] = grading_str(got);
    j["rhs"] = grading_str(expected);
    return std::optional<Json>{j};
  }));

  out.push_back(check_all(d, cfg, "xi algebra morphism", 2, 2, 0, [&](const Cases& cs, const Tuple& t) {
    const auto& m = t.g[0];
    const auto& p = t.g[1];
    const CrossedElem x = el(t.x[0]), y = el(t.x[1]);
    const CrossedElem lhs = d.xi(m, p, d.mul(p, x, y));
    const CrossedElem rhs = d.mul(d.conjugate(m, p), d.xi(m, p, x), d.xi(m, p, y));
    return compare<CrossedElem>(cs, t, lhs, rhs, shower<2>(d));
  }));

  out.push_back(check_all(d, cfg, "xi group action", 3, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const auto& [m, n, p] = std::tie(t.g[0], t.g[1], t.g[2]);
    const CrossedElem x = el(t.x[0]);
    const CrossedElem lhs = d.xi(m, d.conjugate(n, p), d.xi(n, p, x));
    const CrossedElem rhs = d.xi(d.grading_mul(m, n), p, x);
    return compare<CrossedElem>(cs, t, lhs, rhs, shower<2>(d));
  }));

  out.push_back(check_all(d, cfg, "xi inverse", 2, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const auto& m = t.g[0];
    const auto& p = t.g[1];
    const CrossedElem x = el(t.x[0]);
    const CrossedElem back = d.xi(d.grading_inv(m), d.conjugate(m, p), d.xi(m, p, x));
    return compare<CrossedElem>(cs, t, back, x, shower<2>(d));
  }));

  // Δ_{mpm⁻¹,mqm⁻¹}(ξ_m x)(1⊗ξ_m y) = (ξ_m⊗ξ_m)(Δ_{p,q}(x)(1⊗y))
  out.push_back(check_all(d, cfg, "xi comultiplication", 3, 1, 1, [&](const Cases& cs, const Tuple& t) {
    const auto& [m, p, q] = std::tie(t.g[0], t.g[1], t.g[2]);
    const CrossedElem x = el(t.x[0]);
    const CrossedElem& y = t.c[0];
    const CrossedPair lhs =
        d.delta_right(d.conjugate(m, p), d.conjugate(m, q), d.xi(m, d.grading_mul(p, q), x), d.xi(m, q, y));
    CrossedPair rhs;
    for (const auto& [k, c] : d.delta_right(p, q, x, y)) {
      rhs = rhs + lc_tensor(d.xi(m, p, key_leg(k, 0)), d.xi(m, q, key_leg(k, 1))).scaled(c);
    }
    return compare<CrossedPair>(cs, t, lhs, rhs, shower<4>(d));
  }));

  out.push_back(check_all(d, cfg, "xi counit", 2, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const CrossedElem x = el(t.x[0]);
    const Scalar lhs = d.counit(d.xi(t.g[0], t.g[1], x));
    const Scalar rhs = d.counit(x);
    return compare<Scalar>(cs, t, lhs, rhs, scalar_str);
  }));
  return out;
}

SuiteReport quasitriangular_suite(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  SuiteReport out;
  const RMatrix r(d, cfg.r_form);
  out.push_back(check_all(d, cfg, "R invariance under crossing", 3, 0, 2, [&](const Cases& cs, const Tuple& t) {
    const CrossedPair x = lc_tensor(t.c[0], t.c[1]);
    return both_sides<CrossedPair>(cs, t, shower<4>(d),
                                   [&](Side s) { return r.axiom1(t.g[0], t.g[1], t.g[2], s, x); });
  }));
  out.push_back(check_all(d, cfg, "R coproduct on first leg", 3, 0, 3, [&](const Cases& cs, const Tuple& t) {
    const CrossedTriple x = lc_tensor(lc_tensor(t.c[0], t.c[1]), t.c[2]);
    return both_sides<CrossedTriple>(cs, t, shower<6>(d),
                                     [&](Side s) { return r.axiom2(t.g[0], t.g[1], t.g[2], s, x); });
  }));
  out.push_back(check_all(d, cfg, "R coproduct on second leg", 3, 0, 3, [&](const Cases& cs, const Tuple& t) {
    const CrossedTriple x = lc_tensor(lc_tensor(t.c[0], t.c[1]), t.c[2]);
    return both_sides<CrossedTriple>(cs, t, shower<6>(d),
                                     [&](Side s) { return r.axiom3(t.g[0], t.g[1], t.g[2], s, x); });
  }));
  out.push_back(check_all(d, cfg, "R intertwines comultiplication", 2, 1, 2, [&](const Cases& cs, const Tuple& t) {
    const CrossedPair v = lc_tensor(t.c[0], t.c[1]);
    return both_sides<CrossedPair>(cs, t, shower<4>(d),
                                   [&](Side s) { return r.axiom4(t.g[0], t.g[1], el(t.x[0]), s, v); });
  }));
  return out;
}

SuiteReport lemma_suite(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  SuiteReport out;
  out.push_back(check_all(d, cfg, "W intertwines coproduct of A", 1, 2, 0, [&](const Cases& cs, const Tuple& t) {
    // Element a, A-cover z, crossed cover x.
    const Elem a = Elem::basis(t.x[0][0]);
    const Label z = t.x[0][1];
    auto show = [&](const Elem3& v) { return mixed_str(d, v, true); };
    return both_sides<Elem3>(cs, t, show, [&](Side s) { return lemma_w_cop(d, t.g[0], a, s, el(t.x[1]), z); });
  }));
  out.push_back(check_all(d, cfg, "W intertwines coproduct of B", 2, 2, 0, [&](const Cases& cs, const Tuple& t) {
    // Element b, B-cover y, crossed cover x.
    const Elem b = Elem::basis(t.x[0][1]);
    const Label y = t.x[0][0];
    auto show = [&](const Elem3& v) { return mixed_str(d, v, false); };
    return both_sides<Elem3>(cs, t, show,
                             [&](Side s) { return lemma_w_delta(d, t.g[0], t.g[1], b, s, y, el(t.x[1])); });
  }));
  return out;
}

SuiteReport oracle_suite(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  namespace cf = closed_form;
  SuiteReport out;
  if (auto ga = dynamic_cast<const GroupAlgebra*>(&d.b())) {
    const Group& h = *ga->group();
    std::map<Grading, cf::GroupGrading> maps;
    for (const auto& g : cfg.gradings) maps.emplace(g, cf::group_grading(g));
    out.push_back(check_all(d, cfg, "closed form product", 1, 2, 0, [&](const Cases& cs, const Tuple& t) {
      const auto& p = t.g[0];
      return compare<CrossedElem>(cs, t, d.mul(p, el(t.x[0]), el(t.x[1])),
                                  cf::group_product(h, maps.at(p), t.x[0], t.x[1]), shower<2>(d));
    }));
    out.push_back(check_all(d, cfg, "closed form comultiplication", 2, 2, 0, [&](const Cases& cs, const Tuple& t) {
      const auto& p = t.g[0];
      const auto& q = t.g[1];
      return compare<CrossedPair>(cs, t, d.delta_right(p, q, el(t.x[0]), el(t.x[1])),
                                  cf::group_delta_right(h, maps.at(p), maps.at(q), t.x[0], t.x[1]), shower<4>(d));
    }));
    out.push_back(check_all(d, cfg, "closed form counit", 0, 1, 0, [&](const Cases& cs, const Tuple& t) {
            return compare<Scalar>(cs, t, d.counit(el(t.x[0])), cf::group_counit(h, t.x[0]), scalar_str);
    }));
    out.push_back(check_all(d, cfg, "closed form antipode", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
      const auto& p = t.g[0];
      return compare<CrossedElem>(cs, t, d.antipode(p, el(t.x[0])), cf::group_antipode(h, maps.at(p), t.x[0]),
                                  shower<2>(d));
    }));
    return out;
  }
  auto fd = dynamic_cast<const FiniteDimHopf*>(&d.b());
  if (fd == nullptr || fd->origin() != FiniteDimHopf::Origin::Double) return out;
  const Group& h = *fd->group();
  // Printed forms are stated for gradings by conjugation with group elements.
  SuiteConfig inner = cfg;
  inner.gradings.clear();
  std::map<Grading, std::pair<GroupElem, GroupElem>> elems;
  for (const auto& g : cfg.gradings) {
    auto a = cf::inner_element(h, g.alpha);
    auto b = cf::inner_element(h, g.beta);
    if (a && b) {
      inner.gradings.push_back(g);
      elems.emplace(g, std::pair{*a, *b});
    }
  }
  out.push_back(check_all(d, cfg, "printed double counit", 0, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const auto n = static_cast<Label>(h.order());
    const Scalar expected(t.x[0][0] % n == h.identity() && t.x[0][1] / n == h.identity() ? 1 : 0);
        return compare<Scalar>(cs, t, d.counit(el(t.x[0])), expected, scalar_str);
  }));
  if (inner.gradings.empty()) return out;
  out.push_back(check_all(d, inner, "printed double product", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const auto& [a, b] = elems.at(t.g[0]);
    const Elem2 ba = Elem2::basis(Key2{t.x[0][1], t.x[0][0]});
    return compare<CrossedElem>(cs, t, d.twist(t.g[0], ba), cf::double_twist(h, a, b, t.x[0][1], t.x[0][0]),
                                shower<2>(d));
  }));
  out.push_back(check_all(d, inner, "printed double antipode", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const auto& [a, b] = elems.at(t.g[0]);
    return compare<CrossedElem>(cs, t, d.antipode(t.g[0], el(t.x[0])), cf::double_antipode(h, a, b, t.x[0]),
                                shower<2>(d));
  }));
  return out;
}

}  // namespace mhag
