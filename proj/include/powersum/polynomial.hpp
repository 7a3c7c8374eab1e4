#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powersum {

/// Degree of a polynomial; the zero polynomial has no degree (minus infinity).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// x^i and the highest stored coefficient is always nonzero, so the zero
/// polynomial is the empty sequence.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  /// c * x^n
  static Polynomial monomial(const Rational& c, std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[n] = c;
    return Polynomial(std::move(v));
  }

  /// a*x + b
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial{b, a}; }

  static Polynomial from_integers(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  bool has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
  }

  Rational operator()(const Rational& x) const { return eval(x); }

  /// Horner evaluation.
  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(v));
  }

  /// this(inner(x)), by Horner's scheme.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this / leading();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  Polynomial& operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("polynomial division by zero scalar");
    for (auto& a : coeffs_) a /= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.coeffs_.size() < b.coeffs_.size()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
    const std::size_t db = b.coeffs_.size() - 1;
    const Rational lb = b.coeffs_.back();
    for (std::size_t i = quo.size(); i-- > 0;) {
      Rational c = rem[i + db] / lb;
      quo[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= c * b.coeffs_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = mag == 1;
      if (!unit || i == 0) os << powersum::to_string(mag);
      if (i >= 1) {
        if (!unit) os << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial derivative(const Polynomial& p) { return p.derivative(); }

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(1), b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

/// Monic gcd over the rationals.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Least positive d with d*p integral, and d*p itself. Zero maps to (1, 0).
struct ClearedPolynomial {
  BigInt d;
  Polynomial scaled;
};

inline ClearedPolynomial clear_denominators(const Polynomial& p) {
  BigInt d = 1;
  for (const auto& c : p.coefficients()) d = lcm(d, c.get_den());
  return {d, p * Rational(d)};
}

/// Content (positive gcd of numerators over lcm of denominators, signed so
/// that the primitive part has positive leading coefficient) and primitive part.
inline std::pair<Rational, Polynomial> content_and_primitive(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0), Polynomial{}};
  auto [d, q] = clear_denominators(p);
  BigInt g = 0;
  for (const auto& c : q.coefficients()) g = gcd(g, c.get_num());
  Rational content = make_rational(g, d);
  if (p.leading() < 0) content = -content;
  return {content, p / content};
}

}  // namespace powersum
