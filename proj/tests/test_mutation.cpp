#include "doctest.h"
#include "fixtures.hpp"
#include "mhag/suites.hpp"

using namespace mhag;
using fixtures::GroupDouble;

namespace {

SuiteConfig z_config(const GroupDouble& z) {
  SuiteConfig cfg;
  cfg.gradings = z.sign_gradings();
  cfg.enumeration = {Enumeration::Mode::Sampled, 60, 42, 6};
  return cfg;
}

std::vector<AxiomReport> all_reports(const DoubleAlgebra& d, const SuiteConfig& cfg) {
  std::vector<AxiomReport> out;
  for (auto suite : {hopf_suite, cograded_suite, crossing_suite, quasitriangular_suite, lemma_suite}) {
    for (auto& r : suite(d, cfg)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> failing(const std::vector<AxiomReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) {
    if (!r.pass) out.push_back(r.axiom);
  }
  return out;
}

}  // namespace

TEST_SUITE("mutation") {
  TEST_CASE("clean Z instance passes every suite") {
    const GroupDouble z(Group::integers());
    CHECK(failing(all_reports(*z.d, z_config(z))).empty());
  }

  TEST_CASE("antipode sign flip is caught by the antipode axiom") {
    const GroupDouble z(Group::integers(), Faults{.antipode_sign = true});
    const auto reports = hopf_suite(*z.d, z_config(z));
    const auto it = std::find_if(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.axiom == "antipode axiom"; });
    REQUIRE(it != reports.end());
    CHECK_FALSE(it->pass);
    CHECK(it->counterexample.contains("lhs"));
  }

  TEST_CASE("dropped R summand is caught on Z") {
    const GroupDouble z(Group::integers(), Faults{.drop_r_summand = true});
    CHECK_FALSE(failing(quasitriangular_suite(*z.d, z_config(z))).empty());
  }

  TEST_CASE("faults that are identities on Z leave every report unchanged") {
    // Aut(Z) is abelian and K(Z) is cocommutative, so these three corruptions
    // compute the same maps as the clean construction.
    const GroupDouble clean(Group::integers());
    const auto ref = all_reports(*clean.d, z_config(clean));
    for (const Faults f : {Faults{.swap_delta_legs = true}, Faults{.wrong_pair_twist = true}, Faults{.wrong_xi = true}}) {
      const GroupDouble z(Group::integers(), f);
      const auto got = all_reports(*z.d, z_config(z));
      REQUIRE(got.size() == ref.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(to_json(got[i]) == to_json(ref[i]));
    }
  }
}
