#include "mhag/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace mhag {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = p;
  mpz_class r = z % m;
  if (r < 0) r += m;
  return r.get_ui();
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() + 1 && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ScalarError("zero denominator");
  *this = from_wide(num, den);
}

Scalar::Scalar(const mpq_class& q) { *this = from_mpq(q); }

Scalar Scalar::residue(std::int64_t value, std::uint64_t prime) {
  if (!is_prime(prime) || prime > (1ULL << 62)) throw ScalarError("modulus must be a prime below 2^62");
  Scalar s;
  s.rep_ = Mod{reduce_signed(value, prime), prime};
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  std::string t(text);
  auto strip = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  t = strip(t);
  if (t.empty()) throw ScalarError("empty scalar literal");
  if (auto pos = t.find(" mod "); pos != std::string::npos) {
    Scalar v = parse(t.substr(0, pos));
    std::uint64_t p = 0;
    try {
      p = std::stoull(strip(t.substr(pos + 5)));
    } catch (const std::exception&) {
      throw ScalarError("bad modulus in '" + t + "'");
    }
    return v.in_field(p);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && (i == 0 || t[i - 1] == '/'));
    if (!ok) throw ScalarError("bad scalar literal '" + t + "'");
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ScalarError("bad scalar literal '" + t + "'");
  if (q.get_den() == 0) throw ScalarError("zero denominator in '" + t + "'");
  q.canonicalize();
  return from_mpq(q);
}

Scalar Scalar::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Scalar s;
  if (fits64(num) && fits64(den)) {
    s.rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
  } else {
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    s.rep_ = std::move(q);
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    s.rep_ = Small{q.get_num().get_si(), q.get_den().get_si()};
  } else {
    s.rep_ = std::move(q);
  }
  return s;
}

bool Scalar::is_zero() const {
  if (auto* s = std::get_if<Small>(&rep_)) return s->num == 0;
  if (auto* m = std::get_if<Mod>(&rep_)) return m->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* s = std::get_if<Small>(&rep_)) return s->num == 1 && s->den == 1;
  if (auto* m = std::get_if<Mod>(&rep_)) return m->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

std::uint64_t Scalar::modulus() const {
  if (auto* m = std::get_if<Mod>(&rep_)) return m->prime;
  return 0;
}

Scalar Scalar::in_field(std::uint64_t prime) const {
  if (auto* m = std::get_if<Mod>(&rep_)) {
    if (m->prime != prime) throw ScalarError("residues of different moduli mixed");
    return *this;
  }
  Scalar num_r = residue(0, prime);  // validates the prime
  mpq_class q = to_mpq();
  std::uint64_t n = reduce_mpz(q.get_num(), prime);
  std::uint64_t d = reduce_mpz(q.get_den(), prime);
  if (d == 0) throw ScalarError("denominator not invertible modulo " + std::to_string(prime));
  num_r.rep_ = Mod{mulmod(n, powmod(d, prime - 2, prime), prime), prime};
  return num_r;
}

mpq_class Scalar::to_mpq() const {
  if (auto* s = std::get_if<Small>(&rep_)) {
    mpq_class q(mpz_class(static_cast<long>(s->num)), mpz_class(static_cast<long>(s->den)));
    return q;
  }
  if (std::holds_alternative<Mod>(rep_)) throw ScalarError("residue has no rational value");
  return std::get<mpq_class>(rep_);
}

std::string Scalar::str() const {
  if (auto* s = std::get_if<Small>(&rep_)) {
    return s->den == 1 ? std::to_string(s->num) : std::to_string(s->num) + "/" + std::to_string(s->den);
  }
  if (auto* m = std::get_if<Mod>(&rep_)) return std::to_string(m->value) + " mod " + std::to_string(m->prime);
  return std::get<mpq_class>(rep_).get_str();
}

std::uint64_t Scalar::common_prime(const Scalar& a, const Scalar& b) {
  std::uint64_t pa = a.modulus(), pb = b.modulus();
  if (pa && pb && pa != pb) throw ScalarError("residues of different moduli mixed");
  return pa ? pa : pb;
}

Scalar Scalar::operator-() const {
  if (auto* s = std::get_if<Small>(&rep_)) return from_wide(-static_cast<__int128>(s->num), s->den);
  if (auto* m = std::get_if<Mod>(&rep_)) {
    Scalar r = *this;
    r.rep_ = Mod{m->value == 0 ? 0 : m->prime - m->value, m->prime};
    return r;
  }
  return from_mpq(-std::get<mpq_class>(rep_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  if (auto* s = std::get_if<Small>(&rep_)) return from_wide(s->den, s->num);
  if (auto* m = std::get_if<Mod>(&rep_)) {
    Scalar r = *this;
    r.rep_ = Mod{powmod(m->value, m->prime - 2, m->prime), m->prime};
    return r;
  }
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  return from_mpq(q);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (std::uint64_t p = Scalar::common_prime(a, b)) {
    auto x = std::get<Scalar::Mod>(a.in_field(p).rep_).value;
    auto y = std::get<Scalar::Mod>(b.in_field(p).rep_).value;
    Scalar r;
    r.rep_ = Scalar::Mod{static_cast<std::uint64_t>((static_cast<u128>(x) + y) % p), p};
    return r;
  }
  auto* sa = std::get_if<Scalar::Small>(&a.rep_);
  auto* sb = std::get_if<Scalar::Small>(&b.rep_);
  if (sa && sb) {
    if (sa->den == 1 && sb->den == 1) {
      return Scalar::from_wide(static_cast<__int128>(sa->num) + sb->num, 1);
    }
    __int128 n = static_cast<__int128>(sa->num) * sb->den + static_cast<__int128>(sb->num) * sa->den;
    __int128 d = static_cast<__int128>(sa->den) * sb->den;
    return Scalar::from_wide(n, d);
  }
  return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (std::uint64_t p = Scalar::common_prime(a, b)) {
    auto x = std::get<Scalar::Mod>(a.in_field(p).rep_).value;
    auto y = std::get<Scalar::Mod>(b.in_field(p).rep_).value;
    Scalar r;
    r.rep_ = Scalar::Mod{mulmod(x, y, p), p};
    return r;
  }
  auto* sa = std::get_if<Scalar::Small>(&a.rep_);
  auto* sb = std::get_if<Scalar::Small>(&b.rep_);
  if (sa && sb) {
    return Scalar::from_wide(static_cast<__int128>(sa->num) * sb->num, static_cast<__int128>(sa->den) * sb->den);
  }
  return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_residue() || b.is_residue()) {
    std::uint64_t p = Scalar::common_prime(a, b);
    return std::get<Scalar::Mod>(a.in_field(p).rep_).value == std::get<Scalar::Mod>(b.in_field(p).rep_).value;
  }
  auto* sa = std::get_if<Scalar::Small>(&a.rep_);
  auto* sb = std::get_if<Scalar::Small>(&b.rep_);
  if (sa && sb) return sa->num == sb->num && sa->den == sb->den;
  return a.to_mpq() == b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace mhag
