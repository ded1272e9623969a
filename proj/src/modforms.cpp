#include "heckezeros/modforms.hpp"

#include "heckezeros/error.hpp"

#include <string>

namespace hz {

namespace {

void require_even_weight(int k, int minimum) {
  if (k % 2 != 0 || k < minimum)
    throw Error(Errc::BadWeight, "weight " + std::to_string(k) + " (need even k >= " + std::to_string(minimum) + ")");
}

int mod12(int k) { return ((k % 12) + 12) % 12; }

}  // namespace

Integer divisor_sigma(unsigned nu, std::uint64_t n) {
  Integer total(0);
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += ipow(Integer(static_cast<unsigned long>(d)), nu);
    const auto e = n / d;
    if (e != d) total += ipow(Integer(static_cast<unsigned long>(e)), nu);
  }
  return total;
}

QSeries eisenstein(int k, std::int64_t N) {
  require_even_weight(k, 4);
  const Rational factor = -Rational(2 * k) / bernoulli(k);
  std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (std::int64_t n = 1; n <= N; ++n)
    c[static_cast<std::size_t>(n)] = factor * divisor_sigma(static_cast<unsigned>(k - 1), static_cast<std::uint64_t>(n));
  return QSeries::from_coeffs(0, std::move(c), N);
}

QSeries delta(std::int64_t N) {
  const QSeries e4 = eisenstein(4, N);
  const QSeries e6 = eisenstein(6, N);
  return ((e4 * e4 * e4) - (e6 * e6)).scaled(Rational(1, 1728));
}

QSeries jinv(std::int64_t N) {
  const QSeries e4 = eisenstein(4, N + 2);
  return (e4 * e4 * e4 * series_inv(delta(N + 2))).truncated(N);
}

QSeries tilde_e(int k, std::int64_t N) {
  require_even_weight(k, 0);
  auto e4 = [&] { return eisenstein(4, N); };
  auto e6 = [&] { return eisenstein(6, N); };
  switch (mod12(k)) {
    case 0: return QSeries::constant(Rational(1), N);
    case 2: { auto a = e4(); return a * a * e6(); }
    case 4: return e4();
    case 6: return e6();
    case 8: { auto a = e4(); return a * a; }
    default: return e4() * e6();  // 10
  }
}

int b_exp(int k) {
  const int b = k / 12;
  return mod12(k) == 2 ? b - 1 : b;
}

RPoly h_poly(int k) {
  const RPoly x = RPoly::x_minus(Rational(0));
  const RPoly x1728 = RPoly::x_minus(Rational(1728));
  switch (mod12(k)) {
    case 0: return RPoly::constant(Rational(1));
    case 2: return x * x * x1728;
    case 4: return x;
    case 6: return x1728;
    case 8: return x * x;
    default: return x * x1728;
  }
}

JReduction reduce_in_j(const QSeries& s) {
  if (s.precision() < 0) throw Error(Errc::InsufficientPrecision, "reduction needs the series through q^0");
  const std::int64_t top = s.is_zero() ? 0 : std::max<std::int64_t>(-s.valuation(), 0);
  // j^d needs j through q^(P + d - 1) to be known through q^P.
  const std::int64_t P = s.precision();
  const QSeries j = jinv(P + top + 1);
  std::vector<QSeries> powers(static_cast<std::size_t>(top) + 1);
  powers[0] = QSeries::constant(Rational(1), P + top + 1);
  for (std::int64_t d = 1; d <= top; ++d) powers[static_cast<std::size_t>(d)] = powers[static_cast<std::size_t>(d - 1)] * j;
  std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1, Rational(0));
  QSeries rest = s;
  for (std::int64_t d = top; d >= 0; --d) {
    const Rational c = rest.coeff(-d);
    if (c == 0) continue;
    coeffs[static_cast<std::size_t>(d)] = c;
    rest = rest - powers[static_cast<std::size_t>(d)].scaled(c);
  }
  return {RPoly(std::move(coeffs)), rest};
}

Faber faber(int n, std::int64_t N) {
  if (n < 0) throw Error(Errc::OutOfRange, "Faber index must be nonnegative");
  if (n == 0) return {QSeries::constant(Rational(1), N), RPoly::constant(Rational(1))};
  RPoly poly = reduce_in_j(QSeries::monomial(Rational(1), -n, 0)).poly;
  // Horner in j; precision drops by one per multiplication.
  const QSeries j = jinv(N + n);
  QSeries acc = QSeries::constant(poly.leading(), N + n);
  for (int d = poly.degree() - 1; d >= 0; --d) acc = acc * j + QSeries::constant(poly.coeff(d), N + n);
  return {acc.truncated(N), std::move(poly)};
}

std::vector<RPoly> faber_polys(int nmax) {
  std::vector<RPoly> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  out.push_back(RPoly::constant(Rational(1)));
  if (nmax <= 0) return out;
  const QSeries j = jinv(nmax + 1);
  std::vector<QSeries> powers{QSeries::constant(Rational(1), nmax + 1)};
  for (int d = 1; d <= nmax; ++d) powers.push_back(powers.back() * j);
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    QSeries rest = QSeries::monomial(Rational(1), -n, 0);
    for (int d = n; d >= 0; --d) {
      const Rational c = rest.coeff(-d);
      if (c == 0) continue;
      coeffs[static_cast<std::size_t>(d)] = c;
      rest = rest - powers[static_cast<std::size_t>(d)].truncated(0).scaled(c);
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

bool is_dim_one_cusp_weight(int k) {
  return k == 12 || k == 16 || k == 18 || k == 20 || k == 22 || k == 26;
}

QSeries cusp_eigenform(int k, std::int64_t N) {
  if (!is_dim_one_cusp_weight(k))
    throw Error(Errc::UnsupportedWeight, "dim S_" + std::to_string(k) + " != 1");
  const QSeries d = delta(N);
  if (k == 12) return d;
  return d * eisenstein(k - 12, N);
}

RPoly divisor_polynomial(const QSeries& f, int k) {
  require_even_weight(k, 0);
  const int b = b_exp(k);
  const std::int64_t N = f.precision() + 2 * b + 2;
  const QSeries divisor = series_pow(delta(N), static_cast<unsigned>(b)) * tilde_e(k, N);
  const QSeries quotient = f * series_inv(divisor);
  if (quotient.precision() < 1)
    throw Error(Errc::InexactDivision, "not enough precision to certify the quotient");
  const JReduction red = reduce_in_j(quotient);
  if (!red.remainder.is_zero())
    throw Error(Errc::InexactDivision, "f / (Delta^b E~_k) leaves a nonzero remainder at q^" +
                                           std::to_string(red.remainder.valuation()));
  return h_poly(k) * red.poly;
}

}  // namespace hz
