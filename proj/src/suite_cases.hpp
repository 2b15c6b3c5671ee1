#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "mhag/format.hpp"
#include "mhag/suites.hpp"

namespace mhag::detail {

struct Tuple {
  std::vector<Grading> g;
  std::vector<Key2> x;           // basis elements
  std::vector<CrossedElem> c;    // covers
};

// Enumerates test tuples of ng gradings, nx basis elements and nc covers.
class Cases {
 public:
  Cases(const DoubleAlgebra& d, const SuiteConfig& cfg, std::string tag, std::size_t ng, std::size_t nx,
        std::size_t nc);

  std::size_t size() const { return size_; }
  Tuple at(std::size_t i) const;
  // Inputs of a tuple as a report object.
  Json describe(const Tuple& t) const;
  const DoubleAlgebra& algebra() const { return d_; }

 private:
  Key2 draw(SplitMix64& rng) const;

  const DoubleAlgebra& d_;
  const SuiteConfig& cfg_;
  std::string tag_;
  std::size_t ng_, nx_, nc_;
  bool exhaustive_;
  std::vector<Key2> basis_;
  std::size_t size_ = 0;
};

// Every tuple of n gradings from the configured set, in lexicographic order.
std::vector<std::vector<Grading>> grading_tuples(const SuiteConfig& cfg, std::size_t n);

template <class T>
struct is_crossed_tensor : std::false_type {};
template <std::size_t N>
struct is_crossed_tensor<LinComb<Key<N>>> : std::bool_constant<N % 2 == 0> {};

// Rewrites symbolic units on the legs of a crossed tensor as the unit element
// of the corresponding (finite) factor, so that equal elements compare equal.
template <std::size_t N>
LinComb<Key<N>> expand_units(const DoubleAlgebra& d, const LinComb<Key<N>>& x) {
  if (!d.a().finite_dimensional()) return x;
  LinComb<Key<N>> out;
  for (const auto& [k, c] : x) {
    std::vector<std::pair<Key<N>, Scalar>> terms{{k, c}};
    for (std::size_t i = 0; i < N; ++i) {
      if (k[i] != kUnit) continue;
      const Elem unit = (i % 2 == 0 ? d.a() : d.b()).unit().value();
      std::vector<std::pair<Key<N>, Scalar>> next;
      for (const auto& [tk, tc] : terms) {
        for (const auto& [u, cu] : unit) {
          Key<N> nk = tk;
          nk[i] = u;
          next.emplace_back(nk, tc * cu);
        }
      }
      terms = std::move(next);
    }
    for (const auto& [tk, tc] : terms) out.add(tk, tc);
  }
  return out;
}

// Counterexample for an identity between two evaluated sides.
template <class T>
std::optional<Json> compare(const Cases& cases, const Tuple& t, const T& lhs, const T& rhs,
                            const std::function<std::string(const T&)>& show, const std::string& note = "") {
  if (lhs == rhs) return std::nullopt;
  if constexpr (is_crossed_tensor<T>::value) {
    if (expand_units(cases.algebra(), lhs) == expand_units(cases.algebra(), rhs)) return std::nullopt;
  }
  Json j = cases.describe(t);
  if (!note.empty()) j["side"] = note;
  j["lhs"] = show(lhs);
  j["rhs"] = show(rhs);
  return j;
}

template <std::size_t N>
std::function<std::string(const LinComb<Key<N>>&)> shower(const DoubleAlgebra& d) {
  return [&d](const LinComb<Key<N>>& x) { return crossed_str(d, x); };
}

}  // namespace mhag::detail
