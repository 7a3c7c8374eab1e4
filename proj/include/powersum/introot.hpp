#pragma once

#include "rational.hpp"

#include <array>
#include <stdexcept>

namespace powersum {

struct NthRoot {
  BigInt root;  // floor(S^(1/n))
  bool exact;   // root^n == S
};

/// floor(S^(1/n)) by integer Newton iteration from an upper bound.
inline NthRoot integer_nth_root(const BigInt& s, unsigned n) {
  if (n < 2) throw std::domain_error("integer_nth_root needs n >= 2");
  if (s < 0) throw std::domain_error("integer_nth_root needs S >= 0");
  if (s < 2) return {s, true};

  const std::size_t bits = mpz_sizeinbase(s.get_mpz_t(), 2);
  BigInt x = 1;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), (bits + n - 1) / n);  // 2^ceil(bits/n) > root
  BigInt pw, next;
  for (;;) {
    // next = ((n-1) x + s / x^(n-1)) / n
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), n - 1);
    mpz_fdiv_q(next.get_mpz_t(), s.get_mpz_t(), pw.get_mpz_t());
    next += x * (n - 1);
    mpz_fdiv_q_ui(next.get_mpz_t(), next.get_mpz_t(), n);
    if (next >= x) break;
    x.swap(next);
  }
  mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), n);
  return {x, pw == s};
}

inline BigInt isqrt(const BigInt& s) { return integer_nth_root(s, 2).root; }

/// Cheap necessary condition for s being a square: residues mod 64, 63, 65, 11.
inline bool maybe_square(const BigInt& s) {
  static constexpr auto table = [](unsigned m) {
    std::array<bool, 65> t{};
    for (unsigned i = 0; i < m; ++i) t[(i * i) % m] = true;
    return t;
  };
  static const auto q64 = table(64), q63 = table(63), q65 = table(65), q11 = table(11);
  return q64[mod_ui(s, 64)] && q63[mod_ui(s, 63)] && q65[mod_ui(s, 65)] && q11[mod_ui(s, 11)];
}

}  // namespace powersum
