#pragma once

#include <cstdint>
#include <vector>

#include "mhag/quasitri.hpp"
#include "mhag/report.hpp"

namespace mhag {

// Exhaustive: every grading tuple from the configured set and every basis
// element; covers are the unit (finite instances only, where unit covers
// decide multiplier equality). Sampled: `count` seeded tuples, labels drawn
// from [-window, window] on infinite instances, covers drawn like elements.
struct Enumeration {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  std::size_t count = 200;
  std::uint64_t seed = 0;
  Label window = 8;
};

struct SuiteConfig {
  std::vector<Grading> gradings;
  Enumeration enumeration;
  RForm r_form = RForm::Canonical;
  // Components larger than this skip the rank-based checks.
  std::size_t rank_dim_limit = 64;
};

using SuiteReport = std::vector<AxiomReport>;

// Coassociativity, counit, antipode axioms, Δ-multiplicativity, S anti-homomorphism.
SuiteReport hopf_suite(const DoubleAlgebra& d, const SuiteConfig& cfg);
// Grading group, orthogonality, associativity, twist maps, commutation rule, pairing, ranks.
SuiteReport cograded_suite(const DoubleAlgebra& d, const SuiteConfig& cfg);
// Crossing action: algebra map, group action, inverse, Δ and ε compatibility.
SuiteReport crossing_suite(const DoubleAlgebra& d, const SuiteConfig& cfg);
// The four generalized R-matrix axioms, each applied on the left and on the right.
SuiteReport quasitriangular_suite(const DoubleAlgebra& d, const SuiteConfig& cfg);
// The two intertwining identities of the canonical multiplier.
SuiteReport lemma_suite(const DoubleAlgebra& d, const SuiteConfig& cfg);
// Agreement with the printed closed forms, where the instance has them.
SuiteReport oracle_suite(const DoubleAlgebra& d, const SuiteConfig& cfg);

}  // namespace mhag
