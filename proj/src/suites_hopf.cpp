#include <limits>

#include "suite_cases.hpp"

namespace mhag {

namespace detail {

Cases::Cases(const DoubleAlgebra& d, const SuiteConfig& cfg, std::string tag, std::size_t ng, std::size_t nx,
             std::size_t nc)
    : d_(d), cfg_(cfg), tag_(std::move(tag)), ng_(ng), nx_(nx), nc_(nc),
      exhaustive_(cfg.enumeration.mode == Enumeration::Mode::Exhaustive) {
  if (cfg.gradings.empty() && ng > 0) throw MhaError("no gradings configured");
  const bool finite = d.a().finite_dimensional();
  if (finite) basis_ = d.basis();
  if (!exhaustive_) {
    if (!finite && cfg.enumeration.window < 1) throw MhaError("sampling window must be at least 1");
    size_ = cfg.enumeration.count;
    return;
  }
  if (!finite) throw MhaError("exhaustive enumeration needs a finite instance; use sampled mode");
  long double n = 1;
  for (std::size_t i = 0; i < ng; ++i) n *= static_cast<long double>(cfg.gradings.size());
  for (std::size_t i = 0; i < nx; ++i) n *= static_cast<long double>(basis_.size());
  if (n > 1e10L) throw MhaError(tag_ + ": exhaustive enumeration is too large; use sampled mode");
  size_ = static_cast<std::size_t>(n);
}

Key2 Cases::draw(SplitMix64& rng) const {
  if (!basis_.empty()) return basis_[rng.below(basis_.size())];
  const Label w = cfg_.enumeration.window;
  const Label a = rng.between(-w, w);
  const Label b = rng.between(-w, w);
  return Key2{a, b};
}

Tuple Cases::at(std::size_t i) const {
  Tuple t;
  if (exhaustive_) {
    // Mixed radix, last basis element least significant.
    std::vector<Key2> xs(nx_);
    for (std::size_t k = nx_; k-- > 0;) {
      xs[k] = basis_[i % basis_.size()];
      i /= basis_.size();
    }
    std::vector<Grading> gs(ng_, cfg_.gradings.front());
    for (std::size_t k = ng_; k-- > 0;) {
      gs[k] = cfg_.gradings[i % cfg_.gradings.size()];
      i /= cfg_.gradings.size();
    }
    t.g = std::move(gs);
    t.x = std::move(xs);
    t.c.assign(nc_, crossed(kUnit, kUnit));
    return t;
  }
  SplitMix64 rng = case_rng(cfg_.enumeration.seed, tag_, i);
  for (std::size_t k = 0; k < ng_; ++k) t.g.push_back(cfg_.gradings[rng.below(cfg_.gradings.size())]);
  for (std::size_t k = 0; k < nx_; ++k) t.x.push_back(draw(rng));
  for (std::size_t k = 0; k < nc_; ++k) {
    const Key2 c = draw(rng);
    t.c.push_back(crossed(c[0], c[1]));
  }
  return t;
}

Json Cases::describe(const Tuple& t) const {
  Json j;
  Json gs = Json::array();
  for (const auto& g : t.g) gs.push_back(grading_str(g));
  j["gradings"] = gs;
  Json xs = Json::array();
  for (const auto& x : t.x) xs.push_back(crossed_str(d_, CrossedElem::basis(x)));
  j["elements"] = xs;
  Json cs = Json::array();
  for (const auto& c : t.c) cs.push_back(crossed_str(d_, c));
  j["covers"] = cs;
  return j;
}

std::vector<std::vector<Grading>> grading_tuples(const SuiteConfig& cfg, std::size_t n) {
  std::vector<std::vector<Grading>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Grading>> next;
    for (const auto& prefix : out) {
      for (const auto& g : cfg.gradings) {
        next.push_back(prefix);
        next.back().push_back(g);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

using detail::Cases;
using detail::compare;
using detail::shower;
using detail::Tuple;

namespace {

CrossedElem el(const Key2& k) { return CrossedElem::basis(k); }

Key<6> join(const Key4& a, const Key2& b) { return {a[0], a[1], a[2], a[3], b[0], b[1]}; }
Key<6> join(const Key2& a, const Key4& b) { return {a[0], a[1], b[0], b[1], b[2], b[3]}; }

template <class F>
AxiomReport check_all(const DoubleAlgebra& d, const SuiteConfig& cfg, const std::string& name, std::size_t ng,
                      std::size_t nx, std::size_t nc, F&& body) {
  Cases cases(d, cfg, name, ng, nx, nc);
  return run_cases(name, cases.size(), [&](std::size_t i) { return body(cases, cases.at(i)); });
}

}  // namespace

SuiteReport hopf_suite(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  SuiteReport out;
  const Grading e = d.unit_grading();

  // (y⊗1⊗1)(Δ_{p,q}⊗ι)(Δ_{pq,r}(x)(1⊗z)) = (ι⊗Δ_{q,r})((y⊗1)Δ_{p,qr}(x))(1⊗1⊗z)
  out.push_back(check_all(d, cfg, "coassociativity", 3, 1, 2, [&](const Cases& cs, const Tuple& t) {
    const auto& [p, q, r] = std::tie(t.g[0], t.g[1], t.g[2]);
    const CrossedElem x = el(t.x[0]);
    CrossedTriple lhs, rhs;
    for (const auto& [k, c] : d.delta_right(d.grading_mul(p, q), r, x, t.c[1])) {
      for (const auto& [u, cu] : d.delta_left(p, q, key_leg(k, 0), t.c[0])) {
        lhs.add(join(u, Key2{k[2], k[3]}), c * cu);
      }
    }
    for (const auto& [k, c] : d.delta_left(p, d.grading_mul(q, r), x, t.c[0])) {
      for (const auto& [v, cv] : d.delta_right(q, r, key_leg(k, 1), t.c[1])) {
        rhs.add(join(Key2{k[0], k[1]}, v), c * cv);
      }
    }
    return compare<CrossedTriple>(cs, t, lhs, rhs, shower<6>(d));
  }));

  // (ε⊗ι)(Δ_{e,p}(x)(1⊗y)) = xy and (ι⊗ε)((y⊗1)Δ_{p,e}(x)) = yx
  out.push_back(check_all(d, cfg, "counit", 1, 1, 1, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const CrossedElem x = el(t.x[0]);
    const CrossedElem& y = t.c[0];
    CrossedElem right, left;
    for (const auto& [k, c] : d.delta_right(e, p, x, y)) right.add(Key2{k[2], k[3]}, c * d.counit(key_leg(k, 0)));
    for (const auto& [k, c] : d.delta_left(p, e, x, y)) left.add(Key2{k[0], k[1]}, c * d.counit(key_leg(k, 1)));
    if (auto bad = compare<CrossedElem>(cs, t, right, d.mul(p, x, y), shower<2>(d), "right cover")) return bad;
    return compare<CrossedElem>(cs, t, left, d.mul(p, y, x), shower<2>(d), "left cover");
  }));

  // m(S_{p⁻¹}⊗ι)(Δ_{p⁻¹,p}(x)(1⊗y)) = ε(x)y and m((y⊗1)(ι⊗S_{p⁻¹})Δ_{p,p⁻¹}(x)) = ε(x)y, x at e
  out.push_back(check_all(d, cfg, "antipode axiom", 1, 1, 1, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const Grading pi = d.grading_inv(p);
    const CrossedElem x = el(t.x[0]);
    const CrossedElem& y = t.c[0];
    const CrossedElem expected = y.scaled(d.counit(x));
    CrossedElem first, second;
    for (const auto& [k, c] : d.delta_right(pi, p, x, y)) {
      first = first + d.mul(p, d.antipode(pi, key_leg(k, 0)), key_leg(k, 1)).scaled(c);
    }
    for (const auto& [k, c] : d.delta_left(p, pi, x, y)) {
      second = second + d.mul(p, key_leg(k, 0), d.antipode(pi, key_leg(k, 1))).scaled(c);
    }
    if (auto bad = compare<CrossedElem>(cs, t, first, expected, shower<2>(d), "antipode on first leg")) return bad;
    return compare<CrossedElem>(cs, t, second, expected, shower<2>(d), "antipode on second leg");
  }));

  out.push_back(check_all(d, cfg, "antipode inverse", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const CrossedElem x = el(t.x[0]);
    if (auto bad = compare<CrossedElem>(cs, t, d.antipode_inv(p, d.antipode(p, x)), x, shower<2>(d), "S^-1 S")) {
      return bad;
    }
    return compare<CrossedElem>(cs, t, d.antipode(p, d.antipode_inv(p, x)), x, shower<2>(d), "S S^-1");
  }));

  out.push_back(check_all(d, cfg, "antipode routes", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const CrossedElem x = el(t.x[0]);
    return compare<CrossedElem>(cs, t, d.antipode(t.g[0], x), d.antipode_expanded(t.g[0], x), shower<2>(d));
  }));

  // (y⊗1)Δ(xx')(1⊗z) = ((y⊗1)Δ(x))(Δ(x')(1⊗z))
  out.push_back(check_all(d, cfg, "delta multiplicativity", 2, 2, 2, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const Grading& q = t.g[1];
    const Grading pq = d.grading_mul(p, q);
    const CrossedElem x = el(t.x[0]);
    const CrossedElem x2 = el(t.x[1]);
    CrossedPair lhs;
    for (const auto& [k, c] : d.delta_right(p, q, d.mul(pq, x, x2), t.c[1])) {
      lhs = lhs + lc_tensor(d.mul(p, t.c[0], key_leg(k, 0)), key_leg(k, 1)).scaled(c);
    }
    const CrossedPair rhs = d.pair_mul(p, q, d.delta_left(p, q, x, t.c[0]), d.delta_right(p, q, x2, t.c[1]));
    return compare<CrossedPair>(cs, t, lhs, rhs, shower<4>(d));
  }));

  out.push_back(check_all(d, cfg, "antipode anti-homomorphism", 1, 2, 0, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const CrossedElem x = el(t.x[0]);
    const CrossedElem x2 = el(t.x[1]);
    const CrossedElem lhs = d.antipode(p, d.mul(p, x, x2));
    const CrossedElem rhs = d.mul(d.grading_inv(p), d.antipode(p, x2), d.antipode(p, x));
    return compare<CrossedElem>(cs, t, lhs, rhs, shower<2>(d));
  }));
  return out;
}

SuiteReport cograded_suite(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  SuiteReport out;
  const Grading e = d.unit_grading();
  const bool finite = d.a().finite_dimensional();

  {
    const auto tuples = detail::grading_tuples(cfg, 3);
    out.push_back(run_cases("grading group", tuples.size(), [&](std::size_t i) -> std::optional<Json> {
      const auto& [p, q, r] = std::tie(tuples[i][0], tuples[i][1], tuples[i][2]);
      std::string broken;
      if (d.grading_mul(d.grading_mul(p, q), r) != d.grading_mul(p, d.grading_mul(q, r))) broken = "associativity";
      else if (d.grading_mul(p, e) != p || d.grading_mul(e, p) != p) broken = "unit";
      else if (d.grading_mul(p, d.grading_inv(p)) != e || d.grading_mul(d.grading_inv(p), p) != e) broken = "inverse";
      if (broken.empty()) return std::nullopt;
      return Json{{"gradings", {grading_str(p), grading_str(q), grading_str(r)}}, {"law", broken}};
    }));
  }

  out.push_back(check_all(d, cfg, "graded orthogonality", 2, 2, 0, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const Grading& q = t.g[1];
    const CrossedElem x = el(t.x[0]);
    const CrossedElem y = el(t.x[1]);
    GradedElem expected;
    if (p == q) {
      if (CrossedElem m = d.mul(p, x, y); !m.empty()) expected[p] = m;
    }
    const GradedElem got = graded_mul(d, GradedElem{{p, x}}, GradedElem{{q, y}});
    auto show = [&](const GradedElem& g) {
      std::string s;
      for (const auto& [k, v] : g) s += grading_str(k) + ": " + crossed_str(d, v) + "; ";
      return s.empty() ? std::string("0") : s;
    };
    return compare<GradedElem>(cs, t, got, expected, show);
  }));

  out.push_back(check_all(d, cfg, "associativity", 1, 3, 0, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const CrossedElem x = el(t.x[0]), y = el(t.x[1]), z = el(t.x[2]);
    return compare<CrossedElem>(cs, t, d.mul(p, d.mul(p, x, y), z), d.mul(p, x, d.mul(p, y, z)), shower<2>(d));
  }));

  auto show_pair = [](const Elem2& x) { return to_string(x); };
  out.push_back(check_all(d, cfg, "twist roundtrip", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const Grading& p = t.g[0];
    const Elem2 ab = Elem2::basis(t.x[0]);
    const Elem2 ba = Elem2::basis(Key2{t.x[0][1], t.x[0][0]});
    if (auto bad = compare<Elem2>(cs, t, d.twist_inv(p, d.twist(p, ba)), ba, show_pair, "inverse after twist")) {
      return bad;
    }
    return compare<Elem2>(cs, t, d.twist(p, d.twist_inv(p, ab)), ab, show_pair, "twist after inverse");
  }));

  out.push_back(check_all(d, cfg, "twist factorization", 1, 1, 0, [&](const Cases& cs, const Tuple& t) {
    const Elem2 ba = Elem2::basis(Key2{t.x[0][1], t.x[0][0]});
    return compare<Elem2>(cs, t, d.twist(t.g[0], ba), d.twist_composite(t.g[0], ba), show_pair);
  }));

  out.push_back(check_all(d, cfg, "commutation rule", 1, 2, 0, [&](const Cases& cs, const Tuple& t) {
    const CrossedElem r =
        d.commutation_residual(t.g[0], Elem::basis(t.x[0][0]), Elem::basis(t.x[0][1]), el(t.x[1]));
    return compare<CrossedElem>(cs, t, r, CrossedElem{}, shower<2>(d), "residual");
  }));

  {
    std::vector<Label> labels;
    if (finite) {
      labels = d.a().basis();
    } else {
      for (Label l = -cfg.enumeration.window; l <= cfg.enumeration.window; ++l) labels.push_back(l);
    }
    out.push_back(run_cases("pairing", 1, [&](std::size_t) -> std::optional<Json> {
      if (auto why = d.pairing().check(labels)) return Json{{"failure", *why}};
      return std::nullopt;
    }));
  }

  if (finite && d.basis().size() <= cfg.rank_dim_limit) {
    const auto singles = detail::grading_tuples(cfg, 1);
    out.push_back(run_cases("nondegeneracy", singles.size(), [&](std::size_t i) -> std::optional<Json> {
      const auto r = nondegeneracy_ranks(d, singles[i][0]);
      if (r.left == r.dim && r.right == r.dim) return std::nullopt;
      return Json{{"grading", grading_str(singles[i][0])}, {"dim", r.dim}, {"left_rank", r.left}, {"right_rank", r.right}};
    }));
    const auto pairs = detail::grading_tuples(cfg, 2);
    out.push_back(run_cases("surjectivity", pairs.size(), [&](std::size_t i) -> std::optional<Json> {
      const auto r = surjectivity_ranks(d, pairs[i][0], pairs[i][1]);
      if (r.left == r.dim && r.right == r.dim) return std::nullopt;
      return Json{{"gradings", {grading_str(pairs[i][0]), grading_str(pairs[i][1])}},
                  {"dim", r.dim},
                  {"right_rank", r.right},
                  {"left_rank", r.left}};
    }));
  }
  return out;
}

}  // namespace mhag
