#pragma once

// G(x) = (x+1)^k + (x+2)^k + ... + (lx)^k built from Bernoulli polynomials,
// P(x) = B_q(lx+1) - B_q(x+1), and a literal-summation oracle for G.

#include "bernoulli.hpp"
#include "squarefree.hpp"

#include <cstdint>
#include <stdexcept>

namespace powersum {

struct PowerSumInstance {
  unsigned k;  // exponent
  unsigned l;  // range multiplier

  PowerSumInstance(unsigned k_, unsigned l_) : k(k_), l(l_) {
    if (k < 1) throw std::domain_error("power sum needs k >= 1");
    if (l < 2) throw std::domain_error("power sum needs l >= 2");
  }

  unsigned q() const { return k + 1; }
};

inline Polynomial construct_P(unsigned q, unsigned l) {
  if (q < 2) throw std::domain_error("construct_P needs q >= 2");
  if (l < 2) throw std::domain_error("construct_P needs l >= 2");
  const Polynomial b = bernoulli_polynomial(q);
  return b.compose(Polynomial::linear(l, 1)) - b.compose(Polynomial::linear(1, 1));
}

inline Polynomial construct_G(const PowerSumInstance& inst) {
  return construct_P(inst.q(), inst.l) / Rational(inst.q());
}

/// sum_{j=x+1}^{lx} j^k by direct big-integer summation.
inline BigInt power_sum_oracle(const PowerSumInstance& inst, std::uint64_t x) {
  if (x < 1) throw std::domain_error("power_sum_oracle needs x >= 1");
  BigInt sum = 0, term;
  const std::uint64_t hi = x * inst.l;
  for (std::uint64_t j = x + 1; j <= hi; ++j) {
    BigInt base = big_from_u64(j);
    mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), inst.k);
    sum += term;
  }
  return sum;
}

/// True iff p has at least two distinct complex zeros.
inline bool check_two_distinct_zeros(const Polynomial& p) {
  if (p.is_constant()) throw std::domain_error("check_two_distinct_zeros needs a nonconstant polynomial");
  return squarefree_decompose(p).distinct_zeros() >= 2;
}

}  // namespace powersum
