#pragma once

#include "polynomial.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace powersum {

/// Integer polynomial reduced modulo 2 or 4. Coefficients live in
/// [0, modulus) and trailing zeros are trimmed.
class ModPoly {
 public:
  ModPoly(unsigned modulus, std::vector<unsigned> coeffs) : modulus_(modulus), coeffs_(std::move(coeffs)) {
    check_modulus(modulus_);
    for (auto& c : coeffs_) c %= modulus_;
    trim();
  }

  ModPoly(unsigned modulus, std::initializer_list<unsigned> coeffs)
      : ModPoly(modulus, std::vector<unsigned>(coeffs)) {}

  unsigned modulus() const { return modulus_; }
  const std::vector<unsigned>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  unsigned coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0u; }

  /// Reduce to a smaller modulus dividing the current one (4 -> 2).
  ModPoly reduce(unsigned m) const {
    if (modulus_ % m != 0) throw std::domain_error("modulus does not divide current modulus");
    return ModPoly(m, coeffs_);
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    same_ring(a, b);
    std::vector<unsigned> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return ModPoly(a.modulus_, std::move(v));
  }

  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus_, std::vector<unsigned>{});
    std::vector<unsigned> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] = (v[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.modulus_;
    return ModPoly(a.modulus_, std::move(v));
  }

  friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      unsigned c = coeffs_[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << 'x';
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

 private:
  static void check_modulus(unsigned m) {
    if (m != 2 && m != 4) throw std::domain_error("modulus must be 2 or 4");
  }
  static void same_ring(const ModPoly& a, const ModPoly& b) {
    if (a.modulus_ != b.modulus_) throw std::domain_error("mixed moduli");
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  unsigned modulus_;
  std::vector<unsigned> coeffs_;
};

/// Coefficient-wise reduction of an integer polynomial into [0, m).
inline ModPoly reduce_mod(const Polynomial& p, unsigned m) {
  if (m != 2 && m != 4) throw std::domain_error("modulus must be 2 or 4");
  std::vector<unsigned> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!is_integer(c)) throw std::domain_error("reduce_mod needs integer coefficients");
    v.push_back(static_cast<unsigned>(mod_ui(c.get_num(), m)));
  }
  return ModPoly(m, std::move(v));
}

}  // namespace powersum
