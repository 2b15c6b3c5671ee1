#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mhag/scalar.hpp"

namespace mhag {

// Basis labels are opaque integers; every instance encodes its basis into them.
using Label = std::int64_t;

// Sentinel standing for the unit 1_{M(X)} of a multiplier algebra inside a
// basis slot (e.g. the A-slot of 1 ⋈ b).
inline constexpr Label kUnit = INT64_MIN;

template <std::size_t N>
using Key = std::array<Label, N>;

using Key2 = Key<2>;
using Key3 = Key<3>;
using Key4 = Key<4>;
using Key6 = Key<6>;

// Finitely supported linear combination over an ordered key set. No zero
// coefficient is ever stored, so structural equality is mathematical equality.
template <typename K>
class LinComb {
 public:
  using key_type = K;
  using map_type = std::map<K, Scalar>;

  LinComb() = default;
  static LinComb basis(const K& k, Scalar c = Scalar(1)) {
    LinComb r;
    r.add(k, std::move(c));
    return r;
  }

  // Adds c·δ_k, dropping the entry if it cancels.
  void add(const K& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // this += c·y
  void add(const LinComb& y, const Scalar& c = Scalar(1)) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : y.terms_) add(k, c.is_one() ? v : v * c);
  }

  Scalar coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  std::vector<K> support() const {
    std::vector<K> s;
    s.reserve(terms_.size());
    for (const auto& kv : terms_) s.push_back(kv.first);
    return s;
  }

  LinComb scaled(const Scalar& c) const {
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
  }

  // Linear extension of a basis map.
  template <typename F>
  auto map_linear(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const K&>()))>;
    Out r;
    for (const auto& [k, v] : terms_) r.add(f(k), v);
    return r;
  }

  // Relabels keys (bijective relabelings keep normalization; others merge).
  template <typename F>
  auto relabel(F&& f) const {
    using K2 = std::decay_t<decltype(f(std::declval<const K&>()))>;
    LinComb<K2> r;
    for (const auto& [k, v] : terms_) r.add(f(k), v);
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  friend LinComb operator+(LinComb a, const LinComb& b) {
    a.add(b);
    return a;
  }
  friend LinComb operator-(LinComb a, const LinComb& b) {
    a.add(b, Scalar(-1));
    return a;
  }
  LinComb operator-() const { return scaled(Scalar(-1)); }

 private:
  map_type terms_;
};

// x + c·y
template <typename K>
LinComb<K> lc_combine(const LinComb<K>& x, const Scalar& c, const LinComb<K>& y) {
  LinComb<K> r = x;
  r.add(y, c);
  return r;
}

template <typename K>
std::vector<K> lc_support(const LinComb<K>& x) {
  return x.support();
}

namespace detail {

template <typename K>
struct KeyArity;
template <>
struct KeyArity<Label> {
  static constexpr std::size_t value = 1;
};
template <std::size_t N>
struct KeyArity<Key<N>> {
  static constexpr std::size_t value = N;
};

template <typename K>
Label key_at(const K& k, std::size_t i) {
  if constexpr (std::is_same_v<K, Label>) {
    (void)i;
    return k;
  } else {
    return k[i];
  }
}

}  // namespace detail

// Tensor product of linear combinations; keys are concatenated.
template <typename K1, typename K2>
auto lc_tensor(const LinComb<K1>& x, const LinComb<K2>& y) {
  constexpr std::size_t n1 = detail::KeyArity<K1>::value;
  constexpr std::size_t n2 = detail::KeyArity<K2>::value;
  using Out = Key<n1 + n2>;
  LinComb<Out> r;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      Out k{};
      for (std::size_t i = 0; i < n1; ++i) k[i] = detail::key_at(kx, i);
      for (std::size_t i = 0; i < n2; ++i) k[n1 + i] = detail::key_at(ky, i);
      r.add(k, cx * cy);
    }
  }
  return r;
}

inline std::string label_str(Label l) { return l == kUnit ? std::string("1") : std::to_string(l); }

template <typename K>
std::string key_str(const K& k) {
  if constexpr (std::is_same_v<K, Label>) {
    return label_str(k);
  } else {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += ",";
      s += label_str(k[i]);
    }
    return s + ")";
  }
}

template <typename K>
std::string to_string(const LinComb<K>& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << key_str(k);
  }
  return os.str();
}

template <typename K>
std::ostream& operator<<(std::ostream& os, const LinComb<K>& x) {
  return os << to_string(x);
}

using Elem = LinComb<Label>;
using Elem2 = LinComb<Key2>;
using Elem3 = LinComb<Key3>;
using Elem4 = LinComb<Key4>;
using Elem6 = LinComb<Key6>;

}  // namespace mhag
