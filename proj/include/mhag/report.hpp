#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mhag {

using Json = nlohmann::ordered_json;

// SplitMix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// Independent stream for case `index` of the check named `tag`.
SplitMix64 case_rng(std::uint64_t seed, const std::string& tag, std::uint64_t index);

struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::size_t cases = 0;
  Json counterexample;  // null when passing
};

Json to_json(const AxiomReport& r);

// Worker count: hardware concurrency, capped by MHAG_THREADS when set to a positive integer.
std::size_t worker_count();

// Runs check(i) for i in [0, n) on worker_count() threads. A check returns a
// counterexample on failure. The reported counterexample is the one with the
// smallest index, independent of scheduling.
AxiomReport run_cases(std::string axiom, std::size_t n, const std::function<std::optional<Json>(std::size_t)>& check);

}  // namespace mhag
