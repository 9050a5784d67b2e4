#ifndef NEGCURVE_EXACT_ARITH_HPP
#define NEGCURVE_EXACT_ARITH_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace negcurve {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant fails; always indicates a bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

/// Largest m with m*m <= n. Newton iteration from an overestimate, then a
/// two-sided correction.
inline BigInt isqrt(const BigInt& n) {
  require(sgn(n) >= 0, "isqrt: negative input");
  if (n < 2) return n;
  // 2^ceil(bits/2) >= sqrt(n)
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) / 2;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// floor(n / sqrt(xi)) for n >= 0, xi >= 1, computed as the largest m with
/// m^2 * xi <= n^2.
inline BigInt floor_div_sqrt(const BigInt& n, const BigInt& xi) {
  require(sgn(n) >= 0, "floor_div_sqrt: n must be non-negative");
  require(xi >= 1, "floor_div_sqrt: xi must be positive");
  BigInt q = n * n;
  mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
  return isqrt(q);
}

/// Exact decision of n/r < sqrt(xi).
inline bool lt_r_sqrt_xi(const BigInt& n, const BigInt& r, const BigInt& xi) {
  require(n >= 1 && r >= 1 && xi >= 1, "lt_r_sqrt_xi: arguments must be positive");
  return n * n < r * r * xi;
}

/// i (i-1) ... (i-s+1); 1 for s = 0 and 0 once a factor hits zero.
inline BigInt falling_factorial(const BigInt& i, std::int64_t s) {
  require(sgn(i) >= 0 && s >= 0, "falling_factorial: arguments must be non-negative");
  if (i < s) return 0;
  BigInt out = 1;
  for (std::int64_t t = 0; t < s; ++t) out *= i - t;
  return out;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  require(sgn(den) != 0, "make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_reduced(const Rational& q) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return sgn(q.get_den()) > 0 && g == 1;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Always "num/den", including integers ("3/1").
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p/q" or "p"; the fraction must already be in lowest terms.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  try {
    num = BigInt(text.substr(0, slash));
    if (slash != std::string::npos) den = BigInt(text.substr(slash + 1));
  } catch (const std::invalid_argument&) {
    throw ContractViolation("parse_rational: malformed '" + text + "'");
  }
  require(sgn(den) > 0, "parse_rational: denominator must be positive");
  Rational q(num, den);
  require(is_reduced(q), "parse_rational: fraction not in lowest terms");
  return q;
}

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<signed long>(v)); }

/// Narrowing conversion that refuses to lose information.
inline std::int64_t to_int64(const BigInt& v) {
  ensure(mpz_fits_slong_p(v.get_mpz_t()) != 0, "to_int64: value out of range");
  return static_cast<std::int64_t>(v.get_si());
}

namespace word {

using i128 = __int128;
using u128 = unsigned __int128;

/// Largest m with m*m <= n, for 128-bit operands. Floating seed, exact fix-up.
inline u128 isqrt(u128 n) {
  if (n < 2) return n;
  auto m = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  // m*m cannot overflow: m <= 2^64 + small, and the fix-ups compare by division.
  while (m > 0 && m > n / m) --m;
  while ((m + 1) <= n / (m + 1)) ++m;
  return m;
}

/// floor(n / sqrt(xi)); the caller guarantees n*n fits in 127 bits.
inline u128 floor_div_sqrt(u128 n, u128 xi) { return isqrt((n * n) / xi); }

inline BigInt to_big(u128 v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

inline BigInt to_big(i128 v) {
  return v < 0 ? BigInt(-to_big(static_cast<u128>(-v))) : to_big(static_cast<u128>(v));
}

}  // namespace word

}  // namespace negcurve

#endif  // NEGCURVE_EXACT_ARITH_HPP
