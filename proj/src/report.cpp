#include "mhag/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace mhag {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit) return v % n;
  }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

SplitMix64 case_rng(std::uint64_t seed, const std::string& tag, std::uint64_t index) {
  // FNV-1a of the tag keeps streams of different checks apart.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : tag) h = (h ^ c) * 0x100000001B3ULL;
  SplitMix64 mix(seed ^ h);
  mix.next();
  SplitMix64 r(mix.next() + index * 0xD1B54A32D192ED03ULL);
  r.next();
  return r;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = r.axiom;
  j["status"] = r.pass ? "pass" : "fail";
  j["cases"] = r.cases;
  j["counterexample"] = r.counterexample;
  return j;
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MHAG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = std::min(n, static_cast<std::size_t>(v));
  }
  return n;
}

AxiomReport run_cases(std::string axiom, std::size_t n, const std::function<std::optional<Json>(std::size_t)>& check) {
  AxiomReport rep;
  rep.axiom = std::move(axiom);
  rep.cases = n;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{n};
  std::mutex mu;
  std::optional<Json> witness;
  std::exception_ptr error;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      // Indices beyond a known failure cannot become the reported one.
      if (i >= n || i > first_bad.load()) return;
      std::optional<Json> bad;
      try {
        bad = check(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        first_bad.store(0);
        return;
      }
      if (!bad) continue;
      std::lock_guard lock(mu);
      if (i < first_bad.load()) {
        first_bad.store(i);
        witness = std::move(bad);
      }
    }
  };
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  if (witness) {
    rep.pass = false;
    (*witness)["case"] = first_bad.load();
    rep.counterexample = std::move(*witness);
  }
  return rep;
}

}  // namespace mhag
