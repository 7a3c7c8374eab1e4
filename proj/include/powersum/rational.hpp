#pragma once

// Exact integers and rationals. Both are GMP-backed; mpq_class keeps values
// canonical (lowest terms, positive denominator) after every arithmetic op,
// and every constructor here canonicalizes explicitly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powersum {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_from_i64(std::int64_t v) {
  if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
  // -(v+1) avoids overflowing on INT64_MIN
  BigInt r = big_from_u64(static_cast<std::uint64_t>(-(v + 1)));
  return -(r + 1);
}

inline BigInt parse_big(const std::string& s) {
  BigInt r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a decimal integer: " + s);
  return r;
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: " + s);
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }
inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  return make_rational(pow(BigInt(base.get_num()), e),
                       pow(BigInt(base.get_den()), e));
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  // multiplicative formula; every partial product is an exact binomial
  BigInt r = 1;
  if (k > n - k) k = n - k;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Non-negative residue of a modulo m (m > 0).
inline unsigned long mod_ui(const BigInt& a, unsigned long m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_odd_prime(unsigned long n) { return n != 2 && is_prime(n); }

inline bool is_power_of_two(unsigned long n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace powersum
