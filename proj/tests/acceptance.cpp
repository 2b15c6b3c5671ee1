// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set passed via
// --expect-fail (default empty), so a known, documented failure keeps the
// suite green while still being printed as FAIL, and an unexpected pass is
// reported as an error.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "mhag/format.hpp"
#include "mhag/oracle.hpp"
#include "mhag/quasitri.hpp"
#include "mhag/suites.hpp"
#include "oracles.hpp"

using namespace mhag;
using fixtures::DrinfeldDouble;
using fixtures::GroupDouble;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates pass/fail plus the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what();
    if (!ok) ++failures_;
  }
  void reports(const std::string& where, const SuiteReport& rs, const std::set<std::string>& only = {}) {
    for (const auto& r : rs) {
      if (!only.empty() && !only.count(r.axiom)) continue;
      cases_ += r.cases;
      check(r.pass, [&] { return where + ": " + r.axiom + " " + r.counterexample.dump(); });
    }
  }
  void add_cases(std::size_t n) { cases_ += n; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks" + cases_str()};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed; first: " + first_failure_};
  }

 private:
  std::string cases_str() const { return cases_ ? ", " + std::to_string(cases_) + " cases" : ""; }
  std::size_t checks_ = 0, failures_ = 0, cases_ = 0;
  std::string first_failure_;
};

SuiteConfig exhaustive(std::vector<Grading> gradings) {
  SuiteConfig cfg;
  cfg.gradings = std::move(gradings);
  return cfg;
}

SuiteConfig sampled_z(const GroupDouble& z) {
  SuiteConfig cfg;
  cfg.gradings = z.sign_gradings();
  cfg.enumeration = {Enumeration::Mode::Sampled, 200, 42, 8};
  return cfg;
}

Automorphism inversion(const GroupPtr& g) {
  std::vector<GroupElem> images;
  for (GroupElem x : g->generators()) images.push_back(g->inv(x));
  return Automorphism::from_generator_images(g, images);
}

// Every group of order at most 6 up to isomorphism, with up to four gradings each.
struct SmallCase {
  std::string name;
  GroupDouble d;
  std::vector<Grading> gradings;
};

std::vector<SmallCase> small_groups() {
  std::vector<SmallCase> out;
  auto abelian = [&](const std::string& name, GroupPtr g, const Automorphism& other) {
    GroupDouble d(g);
    const Automorphism id = Automorphism::identity(g);
    std::vector<Grading> gs{d.grading(id, id)};
    if (!other.is_identity()) {
      gs = {d.grading(id, id), d.grading(id, other), d.grading(other, id), d.grading(other, other)};
    }
    out.push_back({name, std::move(d), std::move(gs)});
  };
  abelian("Z/1", Group::cyclic(1), Automorphism::identity(Group::cyclic(1)));
  for (int n = 2; n <= 6; ++n) {
    const auto g = Group::cyclic(n);
    abelian("Z/" + std::to_string(n), g, inversion(g));
  }
  const auto v4 = Group::table({"e", "a", "b", "c"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  abelian("Z/2xZ/2", v4, Automorphism::from_table(v4, {0, 2, 1, 3}));
  const auto s3 = Group::symmetric(3);
  GroupDouble d(s3);
  const GroupElem t = s3->parse("(12)"), c = s3->parse("(123)"), u = s3->parse("(13)");
  std::vector<Grading> gs{d.inner(0, 0), d.inner(t, c), d.inner(c, t), d.inner(u, u)};
  out.push_back({"S3", std::move(d), std::move(gs)});
  return out;
}

// 1. Generic construction against the closed forms for K(H)⋈KH.
Outcome oracle_group() {
  Tally tally;
  for (const auto& h : {Group::cyclic(4), Group::symmetric(3)}) {
    const GroupDouble s(h);
    std::vector<std::pair<Grading, oracles::GroupPair>> gradings;
    for (const auto& a : inner_automorphisms(h)) {
      for (const auto& b : inner_automorphisms(h)) gradings.push_back({s.grading(a, b), {a, b}});
    }
    const auto basis = s.d->basis();
    const std::string name = h->order() == 4 ? "Z/4" : "S3";
    for (const auto& [p, gp] : gradings) {
      for (const Key2& u : basis) {
        const CrossedElem x = CrossedElem::basis(u);
        tally.check(s.d->counit(x) == oracles::group_counit(*h, u), [&] { return name + " counit at " + to_string(x); });
        tally.check(s.d->antipode(p, x) == oracles::group_antipode(*h, gp, u),
                    [&] { return name + " antipode at " + to_string(x); });
        for (const Key2& v : basis) {
          tally.check(s.d->mul(p, x, CrossedElem::basis(v)) == oracles::group_mul(*h, gp, u, v),
                      [&] { return name + " product at " + to_string(x); });
        }
      }
      for (const auto& [q, gq] : gradings) {
        for (const Key2& u : basis) {
          for (const Key2& v : basis) {
            tally.check(s.d->delta_right(p, q, CrossedElem::basis(u), CrossedElem::basis(v)) ==
                            oracles::group_delta_right(*h, gp, gq, u, v),
                        [&] { return name + " comultiplication"; });
          }
        }
      }
    }
  }
  return tally.outcome("Z/4 (1 grading) and S3 (36 gradings): product, covered comultiplication, counit, antipode");
}

// 2. Generic construction against the displayed Drinfeld-double product and antipode.
Outcome oracle_double() {
  const DrinfeldDouble dd(Group::symmetric(3));
  const auto& h = *dd.group;
  const Label n = static_cast<Label>(h.order());
  Tally printed, derived;
  SplitMix64 rng(2024);
  constexpr int kSamples = 2500;
  for (int i = 0; i < kSamples; ++i) {
    const GroupElem a = static_cast<GroupElem>(rng.below(6)), b = static_cast<GroupElem>(rng.below(6));
    const Label bk = static_cast<Label>(rng.below(static_cast<std::uint64_t>(n * n)));
    const Label ak = static_cast<Label>(rng.below(static_cast<std::uint64_t>(n * n)));
    const Grading g = dd.inner(a, b);
    const CrossedElem product = dd.d->mul(g, crossed(kUnit, bk), crossed(ak, kUnit));
    const CrossedElem shown = closed_form::double_twist(h, a, b, bk, ak);
    printed.check(product == shown, [&] {
      return "product of 1⋈b" + std::to_string(bk) + " and a" + std::to_string(ak) + "⋈1 at (" + h.name(a) + "," +
             h.name(b) + "): generic " + to_string(product) + ", displayed " + to_string(shown);
    });
    const CrossedElem s = dd.d->antipode(g, crossed(ak, bk));
    const CrossedElem shown_s = closed_form::double_antipode(h, a, b, {ak, bk});
    printed.check(s == shown_s, [&] {
      return "antipode at " + to_string(crossed(ak, bk)) + ": generic " + to_string(s) + ", displayed " + to_string(shown_s);
    });
    derived.check(dd.d->twist(g, Elem2::basis({bk, ak})) == Elem2::basis(oracles::double_twist(h, {a, b}, bk, ak)),
                  [] { return std::string("derived twist"); });
    derived.check(s == CrossedElem::basis(oracles::double_antipode(h, {a, b}, {ak, bk})),
                  [] { return std::string("derived antipode"); });
  }
  Outcome out = printed.outcome(std::to_string(kSamples) + " seeded basis pairs over S3 inner gradings");
  const Outcome d = derived.outcome("hand-derived forms");
  out.detail += " | hand-derived forms: " + std::string(d.pass ? "agree" : "DISAGREE") + " (" + d.detail + ")";
  return out;
}

// 3. Hopf axioms.
Outcome hopf_axioms() {
  Tally tally;
  for (auto& c : small_groups()) tally.reports(c.name, hopf_suite(*c.d.d, exhaustive(c.gradings)));
  const GroupDouble z(Group::integers());
  tally.reports("Z", hopf_suite(*z.d, sampled_z(z)));
  return tally.outcome("all groups of order <= 6 exhaustive, Z sampled (200, window 8, seed 42)");
}

// 4. Crossing action.
Outcome crossing() {
  Tally tally;
  const GroupDouble s(Group::symmetric(3));
  tally.reports("S3", crossing_suite(*s.d, exhaustive(s.inner_gradings())));
  return tally.outcome("S3, all 36 inner grading pairs, exhaustive");
}

// 5. Quasitriangularity, group and dual-basis forms.
Outcome quasitriangular() {
  Tally tally;
  for (const auto& h : {Group::cyclic(2), Group::cyclic(3), Group::symmetric(3)}) {
    const GroupDouble s(h);
    std::vector<Grading> gs = s.inner_gradings();
    if (h->order() == 6) {
      const GroupElem t = h->parse("(12)"), c = h->parse("(123)");
      gs = {s.inner(0, 0), s.inner(t, c), s.inner(c, t)};
    } else if (h->order() == 3) {
      const Automorphism id = Automorphism::identity(h), inv = inversion(h);
      gs = {s.grading(id, id), s.grading(id, inv), s.grading(inv, inv)};
    }
    tally.reports("K(" + std::to_string(h->order()) + ")", quasitriangular_suite(*s.d, exhaustive(gs)));

    // Dual-basis instance: closed-form agreement and the same axioms.
    const auto b = FiniteDimHopf::group_algebra(h);
    const DoubleAlgebra dual(std::make_shared<Pairing>(b->dual(), b));
    const RMatrix r(dual);
    std::vector<Grading> dgs;
    for (const auto& x : inner_automorphisms(h)) {
      for (const auto& y : inner_automorphisms(h)) {
        dgs.push_back({HopfAut::from_group(b, x), HopfAut::from_group(b, y)});
        const Automorphism beta_inv = y.inverse();
        for (const Key2& u : dual.basis()) {
          for (const Key2& v : dual.basis()) {
            // (1⋈β⁻¹(y))(δ_x⋈g) ⊗ (δ_y⋈k)
            const GroupElem bb = beta_inv.apply(v[0]);
            const CrossedPair expect = lc_tensor(
                crossed(h->mul(h->mul(v[0], u[0]), h->inv(x.apply(bb))), h->mul(bb, u[1])), CrossedElem::basis(v));
            tally.check(r.apply(dgs.back(), dgs.front(), Side::Left, lc_tensor(CrossedElem::basis(u), CrossedElem::basis(v))) ==
                            expect,
                        [&] { return "dual-basis R closed form at order " + std::to_string(h->order()); });
          }
        }
      }
    }
    if (h->order() == 6) dgs = {dgs[0], dgs[2 * 6 + 3], dgs[3 * 6 + 2]};
    tally.reports("dual-basis K(" + std::to_string(h->order()) + ")", quasitriangular_suite(dual, exhaustive(dgs)));
  }
  const GroupDouble z(Group::integers());
  tally.reports("Z", quasitriangular_suite(*z.d, sampled_z(z)));
  return tally.outcome("Z/2, Z/3, S3 exhaustive (group and dual-basis forms), Z sampled");
}

// 6. Intertwining identities of the canonical multiplier.
Outcome lemma() {
  Tally tally;
  for (auto& c : small_groups()) tally.reports(c.name, lemma_suite(*c.d.d, exhaustive(c.gradings)));
  const DrinfeldDouble dd(Group::symmetric(3));
  const auto& h = *dd.group;
  // The crossed square of D(S3) has 1296² basis covers per grading pair; sample it.
  SuiteConfig dcfg = exhaustive({dd.inner(0, 0), dd.inner(h.parse("(12)"), h.parse("(123)"))});
  dcfg.enumeration = {Enumeration::Mode::Sampled, 2000, 42, 8};
  tally.reports("D(S3)", lemma_suite(*dd.d, dcfg));
  const GroupDouble z(Group::integers());
  tally.reports("Z", lemma_suite(*z.d, sampled_z(z)));
  return tally.outcome("groups of order <= 6 exhaustive, D(S3) sampled (2000), Z sampled (200)");
}

// 7. Commutation rule.
Outcome commutation() {
  Tally tally;
  for (auto& c : small_groups()) tally.reports(c.name, cograded_suite(*c.d.d, exhaustive(c.gradings)), {"commutation rule"});
  return tally.outcome("all groups of order <= 6, exhaustive");
}

// 8. Grading group, T-map roundtrips, non-degeneracy.
Outcome structure() {
  Tally tally;
  const GroupDouble s(Group::symmetric(3));
  const auto all = s.inner_gradings();
  tally.check(all.size() == 36, [&] { return "expected 36 inner grading pairs, got " + std::to_string(all.size()); });
  tally.reports("S3", cograded_suite(*s.d, exhaustive(all)), {"grading group", "twist roundtrip", "twist factorization"});
  for (const InstancePtr& x : std::vector<InstancePtr>{s.a, s.b, FiniteDimHopf::drinfeld_double(s.group)}) {
    for (Label u : x->basis()) {
      for (Label v : x->basis()) {
        const Elem2 e = Elem2::basis({u, v});
        for (TKind k : {TKind::T1, TKind::T2, TKind::T3, TKind::T4}) {
          tally.check(x->t_map_inv(k, x->t_map(k, e)) == e && x->t_map(k, x->t_map_inv(k, e)) == e,
                      [&] { return x->name() + " T-map roundtrip at " + to_string(e); });
        }
      }
    }
  }
  for (auto& c : small_groups()) {
    for (const Grading& g : c.gradings) {
      const auto r = nondegeneracy_ranks(*c.d.d, g);
      tally.check(r.left == r.dim && r.right == r.dim, [&] {
        return c.name + " component " + grading_str(g) + " ranks " + std::to_string(r.left) + "/" +
               std::to_string(r.right) + " of " + std::to_string(r.dim);
      });
    }
  }
  return tally.outcome("36 S3 grading pairs, T-maps on K(S3), KS3, D(S3), ranks on all small components");
}

// 9. Every structure corruption is caught by some suite with a counterexample.
Outcome mutation() {
  const auto s3 = Group::symmetric(3);
  const GroupElem t = s3->parse("(12)"), c = s3->parse("(123)");
  const std::vector<std::pair<std::string, Faults>> faults{{"antipode_sign", {.antipode_sign = true}},
                                                           {"drop_r_summand", {.drop_r_summand = true}},
                                                           {"swap_delta_legs", {.swap_delta_legs = true}},
                                                           {"wrong_pair_twist", {.wrong_pair_twist = true}},
                                                           {"wrong_xi", {.wrong_xi = true}}};
  Tally tally;
  std::string caught;
  for (const auto& [name, f] : faults) {
    const GroupDouble s(s3, f);
    const SuiteConfig cfg = exhaustive({s.inner(0, 0), s.inner(t, c), s.inner(c, t)});
    std::string by;
    for (auto suite : {hopf_suite, cograded_suite, crossing_suite, quasitriangular_suite, lemma_suite}) {
      for (const auto& r : suite(*s.d, cfg)) {
        if (!r.pass && by.empty() && !r.counterexample.is_null()) by = r.axiom;
      }
      if (!by.empty()) break;
    }
    tally.check(!by.empty(), [&] { return name + " was not detected"; });
    caught += (caught.empty() ? "" : ", ") + name + " -> " + (by.empty() ? "undetected" : by);
  }
  return tally.outcome(caught);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::tuple<int, std::string, std::function<Outcome()>>> criteria{
      {1, "oracle equivalence, group case", oracle_group},
      {2, "oracle equivalence, Drinfeld double displays", oracle_double},
      {3, "Hopf axiom suite", hopf_axioms},
      {4, "crossing action", crossing},
      {5, "quasitriangularity", quasitriangular},
      {6, "canonical multiplier intertwiners", lemma},
      {7, "commutation rule", commutation},
      {8, "structural sanity", structure},
      {9, "mutation sensitivity", mutation}};

  std::set<int> failed;
  for (const auto& [id, title, run] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " [" << title << "] " << o.detail << " (" << secs
         << " s)";
    std::cout << line.str() << std::endl;
  }
  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (!only.empty()) {
    std::erase_if(expected, [&](int id) { return std::find(only.begin(), only.end(), id) == only.end(); });
  }
  if (failed != expected) {
    for (int id : failed) {
      if (!expected.count(id)) std::cout << "unexpected failure: criterion " << id << std::endl;
    }
    for (int id : expected) {
      if (!failed.count(id)) std::cout << "expected failure did not occur: criterion " << id << std::endl;
    }
    return 1;
  }
  return 0;
}
