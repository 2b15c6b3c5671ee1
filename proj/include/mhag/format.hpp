#pragma once

#include <sstream>
#include <string>

#include "mhag/crossed.hpp"

namespace mhag {

// Tensor of crossed legs as text, e.g. "2*(d1 ⋈ 3) ⊗ (d0 ⋈ 1)"; legs alternate A and B labels.
template <std::size_t N>
std::string crossed_str(const DoubleAlgebra& d, const LinComb<Key<N>>& x) {
  static_assert(N % 2 == 0);
  if (x.empty()) return "0";
  auto name = [](const MhaInstance& inst, Label l) { return l == kUnit ? std::string("1") : inst.label_name(l); };
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c << "*";
    for (std::size_t i = 0; i < N; i += 2) {
      if (i > 0) os << " ⊗ ";
      os << "(" << name(d.a(), k[i]) << " ⋈ " << name(d.b(), k[i + 1]) << ")";
    }
  }
  return os.str();
}

// Element of B ⊗ (A⋈B), or of (A⋈B) ⊗ A when crossed_first, as text.
inline std::string mixed_str(const DoubleAlgebra& d, const Elem3& x, bool crossed_first) {
  if (x.empty()) return "0";
  auto name = [](const MhaInstance& inst, Label l) { return l == kUnit ? std::string("1") : inst.label_name(l); };
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c << "*";
    if (crossed_first) {
      os << "(" << name(d.a(), k[0]) << " ⋈ " << name(d.b(), k[1]) << ") ⊗ " << name(d.a(), k[2]);
    } else {
      os << name(d.b(), k[0]) << " ⊗ (" << name(d.a(), k[1]) << " ⋈ " << name(d.b(), k[2]) << ")";
    }
  }
  return os.str();
}

inline std::string scalar_str(const Scalar& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

inline std::string grading_str(const Grading& p) {
  return "(" + p.alpha.describe() + ", " + p.beta.describe() + ")";
}

}  // namespace mhag
