#pragma once

#include "heckezeros/error.hpp"
#include "heckezeros/numeric.hpp"
#include "heckezeros/rational.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hz {

// Truncated Laurent series in q with exact rational coefficients.
//
// Coefficients are known for every exponent <= precision(); anything above is
// unknown, never implicitly zero. The representation is canonical: the first
// stored coefficient (at valuation()) is nonzero, and a series that is zero
// through its precision stores nothing and has valuation() == precision() + 1.
class QSeries {
 public:
  QSeries() = default;  // 0 + O(q^0)

  static QSeries from_coeffs(std::int64_t valuation, std::vector<Rational> coeffs,
                             std::int64_t precision);
  static QSeries zero(std::int64_t precision);
  static QSeries constant(const Rational& c, std::int64_t precision);
  static QSeries monomial(const Rational& c, std::int64_t exponent, std::int64_t precision);

  std::int64_t valuation() const { return valuation_; }
  std::int64_t precision() const { return precision_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Zero below valuation(); throws InsufficientPrecision above precision().
  Rational coeff(std::int64_t exponent) const;

  QSeries truncated(std::int64_t precision) const;
  QSeries shifted(std::int64_t by) const;  // multiplication by q^by
  QSeries scaled(const Rational& c) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  void normalize();

  std::int64_t valuation_ = 1;
  std::int64_t precision_ = 0;
  std::vector<Rational> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_pow(const QSeries& a, unsigned exponent);
QSeries series_inv(const QSeries& a);

// B_k for even k >= 0 (and B_1 = -1/2). Throws OddIndex for odd k > 1.
Rational bernoulli(int k);

template <class T>
struct SeriesValue {
  std::complex<T> value;
  T tail_bound;  // |q|^(precision+1) / (1 - |q|) * max |coeff|
};

// Horner evaluation of the truncated series at |q| < 1.
template <class T>
SeriesValue<T> series_eval_numeric(const QSeries& a, const std::complex<T>& q);

extern template SeriesValue<double> series_eval_numeric(const QSeries&, const std::complex<double>&);
extern template SeriesValue<HighFloat> series_eval_numeric(const QSeries&, const HighComplex&);

}  // namespace hz
