#pragma once

// Bernoulli numbers with B_1 = -1/2, Bernoulli polynomials
// B_q(x) = sum_i C(q,i) B_i x^(q-i), and the von Staudt-Clausen denominator.

#include "polynomial.hpp"

#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <vector>

namespace powersum {

/// Memoized B_0, B_1, ... grown by the recurrence sum_{i<=m} C(m+1,i) B_i = 0.
/// Reads take a shared lock; growth takes the exclusive lock.
class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  Rational get(std::size_t i) {
    {
      std::shared_lock lock(mutex_);
      if (i < values_.size()) return values_[i];
    }
    std::unique_lock lock(mutex_);
    grow_locked(i);
    return values_[i];
  }

  /// Extend the table through index max_index, e.g. before a parallel section.
  void warm(std::size_t max_index) {
    std::unique_lock lock(mutex_);
    grow_locked(max_index);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

 private:
  BernoulliTable() : values_{Rational(1)} {}

  void grow_locked(std::size_t max_index) {
    while (values_.size() <= max_index) {
      const std::size_t m = values_.size();
      if (m >= 3 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational s = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (values_[i] == 0) continue;
        s += Rational(binomial(m + 1, i)) * values_[i];
      }
      values_.push_back(-s / Rational(static_cast<unsigned long>(m + 1)));
    }
  }

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

inline Rational bernoulli_number(std::size_t i) { return BernoulliTable::instance().get(i); }

inline Polynomial bernoulli_polynomial(std::size_t q) {
  BernoulliTable::instance().warm(q);
  std::vector<Rational> c(q + 1);
  for (std::size_t i = 0; i <= q; ++i) c[q - i] = Rational(binomial(q, i)) * bernoulli_number(i);
  return Polynomial(std::move(c));
}

/// Product of the primes p with (p - 1) | q, for even q >= 2.
inline BigInt staudt_clausen_denominator(unsigned long q) {
  if (q < 2 || q % 2 != 0) throw std::domain_error("staudt_clausen_denominator needs even q >= 2");
  BigInt r = 1;
  for (unsigned long d = 1; d <= q; ++d)
    if (q % d == 0 && is_prime(d + 1)) r *= d + 1;
  return r;
}

/// B_q(x+1) - B_q(x) == q x^(q-1), symbolically; samples add numeric spot checks.
inline bool verify_translation_identity(std::size_t q, std::span<const Rational> samples = {}) {
  const Polynomial b = bernoulli_polynomial(q);
  const Polynomial shifted = b.compose(Polynomial::linear(1, 1));
  const Polynomial term = q == 0 ? Polynomial{} : Polynomial::monomial(Rational(static_cast<unsigned long>(q)), q - 1);
  const Polynomial diff = shifted - b - term;
  if (!diff.is_zero()) return false;
  for (const auto& x : samples)
    if (b(x + 1) - b(x) != term(x)) return false;
  return true;
}

}  // namespace powersum
