#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace mhag {

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact field element: either a rational number (arbitrary precision, with a
// machine-word fast path) or a residue modulo a prime carried by the value.
//
// Rationals are always stored reduced with a positive denominator. Residues are
// kept in [0, p). Mixing a rational with a residue maps the rational into F_p;
// mixing residues of different moduli throws.
class Scalar {
 public:
  Scalar() : rep_(Small{0, 1}) {}
  Scalar(std::int64_t n) : rep_(Small{n, 1}) {}  // NOLINT(implicit)
  Scalar(int n) : Scalar(static_cast<std::int64_t>(n)) {}  // NOLINT(implicit)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& q);

  static Scalar residue(std::int64_t value, std::uint64_t prime);
  // Accepts "n", "-n", "p/q" (and, for residues, "n mod p").
  static Scalar parse(std::string_view text);

  bool is_zero() const;
  bool is_one() const;
  bool is_residue() const { return std::holds_alternative<Mod>(rep_); }
  std::uint64_t modulus() const;

  // Same value re-expressed in F_p (rationals only need an invertible denominator).
  Scalar in_field(std::uint64_t prime) const;

  mpq_class to_mpq() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  struct Small {
    std::int64_t num;
    std::int64_t den;
  };
  struct Mod {
    std::uint64_t value;
    std::uint64_t prime;
  };

  static Scalar from_wide(__int128 num, __int128 den);
  static Scalar from_mpq(mpq_class q);
  static std::uint64_t common_prime(const Scalar& a, const Scalar& b);

  std::variant<Small, mpq_class, Mod> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mhag
