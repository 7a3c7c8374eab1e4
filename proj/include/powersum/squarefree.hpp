#pragma once

#include "polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace powersum {

struct SquarefreeFactor {
  Polynomial factor;  // primitive, integer coefficients, positive leading coefficient
  unsigned multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// p = content * prod factor_i^multiplicity_i with squarefree, pairwise
/// coprime factors, ordered by (multiplicity, degree, coefficients).
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;

  Polynomial expand() const {
    Polynomial r = Polynomial::constant(content);
    for (const auto& f : factors) r *= pow(f.factor, f.multiplicity);
    return r;
  }

  /// Degree of the squarefree part, i.e. the number of distinct complex zeros.
  std::size_t distinct_zeros() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += *f.factor.degree();
    return n;
  }
};

namespace detail {
inline bool factor_less(const SquarefreeFactor& a, const SquarefreeFactor& b) {
  if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
  const auto& ca = a.factor.coefficients();
  const auto& cb = b.factor.coefficients();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}
}  // namespace detail

/// Yun's algorithm over Q.
inline SquarefreeDecomposition squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  if (p.is_constant()) {
    out.content = p.leading();
    return out;
  }

  const Polynomial dp = p.derivative();
  const Polynomial g = gcd(p, dp);
  Polynomial c = p / g;
  Polynomial d = dp / g - c.derivative();
  for (unsigned i = 1; !c.is_constant(); ++i) {
    Polynomial a = gcd(c, d);
    if (!a.is_constant()) out.factors.push_back({content_and_primitive(a).second, i});
    c = c / a;
    d = d / a - c.derivative();
  }

  Rational lc = 1;
  for (const auto& f : out.factors) lc *= pow(f.factor.leading(), f.multiplicity);
  out.content = p.leading() / lc;
  std::sort(out.factors.begin(), out.factors.end(), detail::factor_less);
  return out;
}

}  // namespace powersum
