#include "heckezeros/qseries.hpp"

#include <algorithm>
#include <string>

namespace hz {

QSeries QSeries::from_coeffs(std::int64_t valuation, std::vector<Rational> coeffs,
                             std::int64_t precision) {
  QSeries s;
  s.valuation_ = valuation;
  s.precision_ = precision;
  auto known = precision - valuation + 1;
  if (known < 0) known = 0;
  if (static_cast<std::int64_t>(coeffs.size()) > known) coeffs.resize(static_cast<std::size_t>(known));
  if (static_cast<std::int64_t>(coeffs.size()) < known) coeffs.resize(static_cast<std::size_t>(known), Rational(0));
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

QSeries QSeries::zero(std::int64_t precision) {
  QSeries s;
  s.precision_ = precision;
  s.valuation_ = precision + 1;
  return s;
}

QSeries QSeries::constant(const Rational& c, std::int64_t precision) {
  return monomial(c, 0, precision);
}

QSeries QSeries::monomial(const Rational& c, std::int64_t exponent, std::int64_t precision) {
  if (exponent > precision) return zero(precision);
  std::vector<Rational> coeffs(static_cast<std::size_t>(precision - exponent + 1), Rational(0));
  coeffs[0] = c;
  return from_coeffs(exponent, std::move(coeffs), precision);
}

void QSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  valuation_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) valuation_ = precision_ + 1;
}

Rational QSeries::coeff(std::int64_t exponent) const {
  if (exponent > precision_)
    throw Error(Errc::InsufficientPrecision, "coefficient of q^" + std::to_string(exponent) +
                                                 " requested beyond precision " + std::to_string(precision_));
  if (exponent < valuation_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

QSeries QSeries::truncated(std::int64_t precision) const {
  if (precision > precision_)
    throw Error(Errc::InsufficientPrecision, "cannot extend a series beyond its precision");
  if (coeffs_.empty()) return zero(precision);
  std::vector<Rational> c(coeffs_);
  return from_coeffs(valuation_, std::move(c), precision);
}

QSeries QSeries::shifted(std::int64_t by) const {
  QSeries s = *this;
  s.valuation_ += by;
  s.precision_ += by;
  return s;
}

QSeries QSeries::scaled(const Rational& c) const {
  if (c == 0) return zero(precision_);
  QSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

QSeries QSeries::operator-() const { return scaled(Rational(-1)); }

QSeries operator+(const QSeries& a, const QSeries& b) {
  const auto precision = std::min(a.precision_, b.precision_);
  const auto valuation = std::min(a.valuation_, b.valuation_);
  if (valuation > precision) return QSeries::zero(precision);
  std::vector<Rational> c(static_cast<std::size_t>(precision - valuation + 1), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    auto e = a.valuation_ + static_cast<std::int64_t>(i);
    if (e > precision) break;
    c[static_cast<std::size_t>(e - valuation)] += a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    auto e = b.valuation_ + static_cast<std::int64_t>(i);
    if (e > precision) break;
    c[static_cast<std::size_t>(e - valuation)] += b.coeffs_[i];
  }
  return QSeries::from_coeffs(valuation, std::move(c), precision);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  // A coefficient of the product is known only if every contributing pair is
  // known; with canonical leading terms that gives the bound below.
  const auto precision = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
  const auto valuation = a.valuation_ + b.valuation_;
  if (a.is_zero() || b.is_zero() || valuation > precision) return QSeries::zero(precision);
  const auto len = static_cast<std::size_t>(precision - valuation + 1);
  std::vector<Rational> c(len, Rational(0));
  const auto na = std::min(a.coeffs_.size(), len);
  Rational t;
  for (std::size_t i = 0; i < na; ++i) {
    if (a.coeffs_[i] == 0) continue;
    const auto nb = std::min(b.coeffs_.size(), len - i);
    for (std::size_t j = 0; j < nb; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      c[i + j] += t;
    }
  }
  return QSeries::from_coeffs(valuation, std::move(c), precision);
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_pow(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::constant(Rational(1), std::max<std::int64_t>(a.precision() - a.valuation(), 0));
  if (exponent == 0) return result;
  QSeries base = a;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1u) {
      result = first ? base : result * base;
      first = false;
    }
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

QSeries series_inv(const QSeries& a) {
  if (a.is_zero()) throw Error(Errc::ZeroLeadingCoefficient, "series is zero through its precision");
  const auto v = a.valuation();
  const auto rel = a.precision() - v;  // relative precision of the unit part
  const auto c = a.coeffs();
  std::vector<Rational> b(static_cast<std::size_t>(rel + 1));
  const Rational lead_inv = 1 / c[0];
  b[0] = lead_inv;
  Rational acc, t;
  for (std::int64_t i = 1; i <= rel; ++i) {
    acc = 0;
    const auto lim = std::min<std::int64_t>(i, static_cast<std::int64_t>(c.size()) - 1);
    for (std::int64_t j = 1; j <= lim; ++j) {
      if (c[static_cast<std::size_t>(j)] == 0) continue;
      mpq_mul(t.get_mpq_t(), c[static_cast<std::size_t>(j)].get_mpq_t(), b[static_cast<std::size_t>(i - j)].get_mpq_t());
      acc += t;
    }
    b[static_cast<std::size_t>(i)] = -acc * lead_inv;
  }
  return QSeries::from_coeffs(-v, std::move(b), -v + rel);
}

Rational bernoulli(int k) {
  if (k < 0) throw Error(Errc::OutOfRange, "Bernoulli index must be nonnegative");
  if (k == 1) return Rational(-1, 2);
  if (k % 2 == 1) throw Error(Errc::OddIndex, "B_" + std::to_string(k) + " requested");
  // Akiyama-Tanigawa transform.
  std::vector<Rational> row(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    row[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto& lo = row[static_cast<std::size_t>(j - 1)];
      lo = j * (lo - row[static_cast<std::size_t>(j)]);
    }
  }
  return row[0];
}

template <class T>
SeriesValue<T> series_eval_numeric(const QSeries& a, const std::complex<T>& q) {
  using std::abs;
  using std::pow;
  const T r = abs(q);
  if (!(r < T(1))) throw Error(Errc::DivergentEvaluation, "|q| >= 1");
  std::complex<T> acc(T(0), T(0));
  T max_abs(0);
  const auto c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const T ci = to_real<T>(*it);
    acc = acc * q + std::complex<T>(ci, T(0));
    if (abs(ci) > max_abs) max_abs = abs(ci);
  }
  std::complex<T> lead(T(1), T(0));
  std::int64_t v = a.is_zero() ? 0 : a.valuation();
  const std::complex<T> step = v >= 0 ? q : std::complex<T>(T(1), T(0)) / q;
  for (std::int64_t i = 0; i < (v >= 0 ? v : -v); ++i) lead *= step;
  T tail = pow(r, static_cast<int>(a.precision() + 1)) / (T(1) - r) * max_abs;
  return {lead * acc, tail};
}

template SeriesValue<double> series_eval_numeric(const QSeries&, const std::complex<double>&);
template SeriesValue<HighFloat> series_eval_numeric(const QSeries&, const HighComplex&);

}  // namespace hz
