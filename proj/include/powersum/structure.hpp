#pragma once

// Zero-multiplicity analysis of P(x) = B_q(lx+1) - B_q(x+1): the integrality
// scale d, reductions of dP modulo 2 and 4, odd/coprime multiplicity counts,
// and the shape test on t_i = m / gcd(m, r_i) for y^m = H(x).

#include "modpoly.hpp"
#include "powersum.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace powersum {

/// Multiset of zero multiplicities, one entry per distinct complex zero.
class MultiplicityProfile {
 public:
  MultiplicityProfile() = default;

  explicit MultiplicityProfile(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities)) {
    for (unsigned r : mult_)
      if (r == 0) throw std::domain_error("multiplicities must be positive");
    std::sort(mult_.begin(), mult_.end());
  }

  MultiplicityProfile(std::initializer_list<unsigned> m) : MultiplicityProfile(std::vector<unsigned>(m)) {}

  static MultiplicityProfile from_decomposition(const SquarefreeDecomposition& dec) {
    std::vector<unsigned> m;
    for (const auto& f : dec.factors) m.insert(m.end(), *f.factor.degree(), f.multiplicity);
    return MultiplicityProfile(std::move(m));
  }

  /// Sorted ascending.
  const std::vector<unsigned>& multiplicities() const { return mult_; }
  std::size_t total_zeros() const { return mult_.size(); }
  /// Sum of multiplicities; equals the degree of the profiled polynomial.
  std::size_t degree() const { return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0}); }

  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

 private:
  std::vector<unsigned> mult_;
};

inline MultiplicityProfile multiplicity_profile(const Polynomial& p) {
  if (p.is_constant()) throw std::domain_error("multiplicity_profile needs a nonconstant polynomial");
  return MultiplicityProfile::from_decomposition(squarefree_decompose(p));
}

inline std::size_t count_odd_multiplicity_zeros(const MultiplicityProfile& profile) {
  const auto& m = profile.multiplicities();
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](unsigned r) { return r % 2 == 1; }));
}

inline std::size_t count_coprime_multiplicity_zeros(const MultiplicityProfile& profile, unsigned p) {
  if (!is_odd_prime(p)) throw std::domain_error("count_coprime_multiplicity_zeros needs an odd prime");
  const auto& m = profile.multiplicities();
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [p](unsigned r) { return r % p != 0; }));
}

/// Least d with d * (B_q(x) - B_q) in Z[x]. The constant B_q is left out
/// because it cancels in P; d * P(x) is then integral for every integer l,
/// which is checked here.
inline BigInt compute_d(unsigned q, unsigned l) {
  if (q < 2) throw std::domain_error("compute_d needs q >= 2");
  const Polynomial b = bernoulli_polynomial(q) - Polynomial::constant(bernoulli_number(q));
  const BigInt d = clear_denominators(b).d;
  if (!(construct_P(q, l) * Rational(d)).has_integer_coefficients())
    throw std::logic_error("d * P(x) is not integral");
  return d;
}

inline Polynomial scaled_P(unsigned q, unsigned l) { return construct_P(q, l) * Rational(compute_d(q, l)); }

inline ModPoly dP_mod(unsigned q, unsigned l, unsigned m) { return reduce_mod(scaled_P(q, l), m); }

struct Lemma6Report {
  unsigned q = 0;
  unsigned l = 0;
  BigInt d;
  MultiplicityProfile profile;
  std::size_t odd_multiplicity_zero_count = 0;
  /// Odd primes p <= q; larger primes are coprime to every multiplicity (all <= q).
  std::map<unsigned, std::size_t> coprime_counts;
  ModPoly mod4_snapshot{4, {}};
  bool exempt_i = false;      // q in {2, 4}
  bool conclusion_i = false;  // odd_multiplicity_zero_count >= 3
  bool conclusion_ii = false; // every coprime count >= 2

  bool holds() const { return (exempt_i || conclusion_i) && conclusion_ii; }
};

inline Lemma6Report verify_lemma6(unsigned q, unsigned l) {
  if (l % 2 != 0) throw std::domain_error("verify_lemma6 needs even l");
  if (q < 2) throw std::domain_error("verify_lemma6 needs q >= 2");
  Lemma6Report r;
  r.q = q;
  r.l = l;
  r.d = compute_d(q, l);
  const Polynomial dp = construct_P(q, l) * Rational(r.d);
  r.profile = multiplicity_profile(dp);
  r.odd_multiplicity_zero_count = count_odd_multiplicity_zeros(r.profile);
  r.mod4_snapshot = reduce_mod(dp, 4);
  r.exempt_i = q == 2 || q == 4;
  r.conclusion_i = r.odd_multiplicity_zero_count >= 3;
  r.conclusion_ii = true;
  for (unsigned p = 3; p <= q; p += 2) {
    if (!is_prime(p)) continue;
    const auto c = count_coprime_multiplicity_zeros(r.profile, p);
    r.coprime_counts[p] = c;
    if (c < 2) r.conclusion_ii = false;
  }
  return r;
}

enum class ExceptionalShape { none, shape_a, shape_b };

inline std::string_view to_string(ExceptionalShape s) {
  switch (s) {
    case ExceptionalShape::none: return "none";
    case ExceptionalShape::shape_a: return "shape_a";
    case ExceptionalShape::shape_b: return "shape_b";
  }
  return "?";
}

struct BrindzaAssessment {
  unsigned m = 0;
  std::vector<unsigned> t_values;  // sorted descending
  ExceptionalShape exceptional = ExceptionalShape::none;

  /// No exceptional shape: solutions of H(x) = b y^m are effectively bounded.
  bool bound_applies() const { return exceptional == ExceptionalShape::none; }
};

/// Shape (a) is {t,1,...,1} with t >= 1 (so all-ones counts), shape (b) is {2,2,1,...,1}.
inline BrindzaAssessment brindza_assess(const MultiplicityProfile& profile, unsigned m) {
  if (m < 2) throw std::domain_error("brindza_assess needs m >= 2");
  BrindzaAssessment a;
  a.m = m;
  for (unsigned r : profile.multiplicities()) a.t_values.push_back(m / std::gcd(m, r));
  std::sort(a.t_values.begin(), a.t_values.end(), std::greater<>());
  const auto non_one = std::count_if(a.t_values.begin(), a.t_values.end(), [](unsigned t) { return t != 1; });
  if (non_one <= 1)
    a.exceptional = ExceptionalShape::shape_a;
  else if (non_one == 2 && a.t_values[0] == 2 && a.t_values[1] == 2)
    a.exceptional = ExceptionalShape::shape_b;
  return a;
}

/// Whether the finiteness argument for G(x) = y^n goes through on this
/// concrete instance: the profile of P must avoid both exceptional shapes.
inline bool theorem2_applicability(unsigned k, unsigned l, unsigned n) {
  if (k < 2 || k == 3) throw std::domain_error("theorem2_applicability needs k >= 2, k != 3");
  if (l < 2 || l % 2 != 0) throw std::domain_error("theorem2_applicability needs even l >= 2");
  if (n < 2) throw std::domain_error("theorem2_applicability needs n >= 2");
  return brindza_assess(multiplicity_profile(construct_P(k + 1, l)), n).bound_applies();
}

}  // namespace powersum
