#pragma once

#include "heckezeros/numeric.hpp"
#include "heckezeros/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hz {

// Univariate polynomial over Q, coefficients in ascending degree. The leading
// coefficient is nonzero; the zero polynomial has no coefficients.
class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(std::vector<Rational> coeffs);

  static RPoly constant(const Rational& c);
  static RPoly x_minus(const Rational& root);  // x - root
  static RPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  template <class T>
  T eval_numeric(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real<T>(*it);
    return acc;
  }

  RPoly derivative() const;
  RPoly monic() const;
  // Primitive integer polynomial; a positive rational multiple of *this, so
  // signs of values are preserved.
  RPoly primitive() const;

  RPoly operator-() const;
  friend RPoly operator+(const RPoly& a, const RPoly& b);
  friend RPoly operator-(const RPoly& a, const RPoly& b);
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend RPoly operator*(const Rational& c, const RPoly& a);
  friend bool operator==(const RPoly& a, const RPoly& b) = default;

  // Human readable, descending degree: "x^2 - 1488*x + 159768".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division, b nonzero: a = q*b + r with deg r < deg b.
std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b);
// Monic gcd (zero if both are zero).
RPoly gcd(const RPoly& a, const RPoly& b);

}  // namespace hz
