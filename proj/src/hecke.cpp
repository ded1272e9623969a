#include "heckezeros/hecke.hpp"

#include "heckezeros/error.hpp"
#include "heckezeros/modforms.hpp"

#include <numeric>
#include <string>

namespace hz {

EigenvalueSource EigenvalueSource::builtin(int k) {
  if (!is_dim_one_cusp_weight(k))
    throw Error(Errc::UnsupportedWeight, "no builtin eigenform of weight " + std::to_string(k));
  EigenvalueSource s;
  s.kind_ = Kind::BuiltinDim1;
  s.weight_ = k;
  return s;
}

EigenvalueSource EigenvalueSource::from_list(std::map<std::int64_t, Rational> values) {
  auto it = values.find(1);
  if (it != values.end() && it->second != 1)
    throw Error(Errc::BadNormalization, "a(1) must be 1");
  values[1] = 1;
  EigenvalueSource s;
  s.kind_ = Kind::List;
  s.values_ = std::move(values);
  return s;
}

Rational EigenvalueSource::operator()(std::int64_t n) const {
  if (n < 1) throw Error(Errc::OutOfRange, "eigenvalue index must be >= 1");
  if (kind_ == Kind::BuiltinDim1) return cusp_eigenform(weight_, n).coeff(n);
  auto it = values_.find(n);
  if (it == values_.end()) throw Error(Errc::MissingEigenvalue, "a(" + std::to_string(n) + ") not supplied");
  return it->second;
}

Rational eigenvalue(const EigenvalueSource& src, std::int64_t n) { return src(n); }

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

QSeries hecke_apply(const QSeries& f, int w, std::int64_t n, std::optional<std::int64_t> want) {
  if (n < 1) throw Error(Errc::OutOfRange, "Hecke index must be >= 1");
  if (w % 2 != 0) throw Error(Errc::BadWeight, "Hecke operators here act on even weight");
  const std::int64_t precision = floor_div(f.precision(), n);
  if (want && *want > precision)
    throw Error(Errc::InsufficientPrecision, "f|T(" + std::to_string(n) + ") known only through q^" +
                                                 std::to_string(precision));
  // Lowest possibly nonzero output exponent: the d = n term reaches m = n*v.
  const std::int64_t v = f.valuation();
  const std::int64_t lo = v < 0 ? v * n : 0;
  if (lo > precision) return QSeries::zero(precision);
  std::vector<Rational> c(static_cast<std::size_t>(precision - lo + 1), Rational(0));
  for (std::int64_t m = lo; m <= precision; ++m) {
    Rational acc(0);
    const std::int64_t g = std::gcd(n, m < 0 ? -m : m);  // gcd(n, 0) = n
    for (std::int64_t d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const std::int64_t idx = n * m / (d * d);
      if (idx < v) continue;
      const Rational cf = f.coeff(idx);
      if (cf == 0) continue;
      acc += rpow(Rational(d), w - 1) * cf;
    }
    c[static_cast<std::size_t>(m - lo)] = std::move(acc);
  }
  return QSeries::from_coeffs(lo, std::move(c), precision);
}

std::vector<Rational> scaled_hecke_principal(const std::vector<Rational>& lower, int k, int m, std::int64_t n) {
  if (m < 1 || static_cast<int>(lower.size()) != m + 1)
    throw Error(Errc::InvalidSpec, "expected coefficients c(-m..0)");
  if (lower.front() != 1) throw Error(Errc::BadNormalization, "leading coefficient c(-m) must be 1");
  auto c = [&](std::int64_t l) -> Rational {
    if (l < -m || l > 0) return Rational(0);
    return lower[static_cast<std::size_t>(l + m)];
  };
  const std::int64_t top = static_cast<std::int64_t>(m) * n;
  std::vector<Rational> out(static_cast<std::size_t>(top) + 1, Rational(0));
  for (std::int64_t e = -top; e <= 0; ++e) {
    Rational acc(0);
    const std::int64_t g = std::gcd(n, -e);
    for (std::int64_t d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const Rational cf = c(n * e / (d * d));
      if (cf == 0) continue;
      // n^(k-1) d^(1-k) = (n/d)^(k-1), an integer since d | n.
      acc += Rational(ipow(Integer(static_cast<unsigned long>(n / d)), static_cast<unsigned long>(k - 1))) * cf;
    }
    out[static_cast<std::size_t>(e + top)] = std::move(acc);
  }
  return out;
}

}  // namespace hz
