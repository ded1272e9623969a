#include "heckezeros/hecke.hpp"
#include "heckezeros/modforms.hpp"
#include "heckezeros/rpoly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace hz;

TEST_CASE("rpoly basics") {
  const RPoly p = RPoly::x_minus(0) * RPoly::x_minus(1728);
  CHECK(p.to_string() == "x^2 - 1728*x");
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.eval(1728) == 0);
  CHECK(RPoly().degree() == -1);
  CHECK(RPoly({1, 0, 0}).degree() == 0);
  const auto [q, r] = divmod(p, RPoly::x_minus(1728));
  CHECK(q == RPoly::x_minus(0));
  CHECK(r.is_zero());
  CHECK(gcd(p, RPoly::x_minus(0) * RPoly::x_minus(5)) == RPoly::x_minus(0));
  CHECK(RPoly({Rational(-1, 2), Rational(3, 4)}).primitive() == RPoly({-2, 3}));
  CHECK(RPoly({Rational(1, 2), Rational(-3, 4)}).primitive() == RPoly({2, -3}));
}

TEST_CASE("eisenstein") {
  const std::int64_t N = 40;
  const QSeries e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e6.coeff(1) == -504);
  for (int k = 4; k <= 24; k += 2) {
    const QSeries e = eisenstein(k, N);
    CHECK(e.coeff(0) == 1);
    const Rational factor = Rational(-2 * k) / bernoulli(k);
    for (std::uint64_t n = 1; n <= 15; ++n)
      CHECK(e.coeff(static_cast<std::int64_t>(n)) == factor * oracle::sigma(static_cast<unsigned>(k - 1), n));
  }
  CHECK_THROWS_AS(eisenstein(3, N), Error);
  CHECK_THROWS_AS(eisenstein(2, N), Error);
  // E_8 = E_4^2 and E_10 = E_4 E_6 (dimension one).
  CHECK(eisenstein(8, N) == e4 * e4);
  CHECK(eisenstein(10, N) == (e4 * e6));
}

TEST_CASE("delta and j") {
  const std::int64_t N = 60;
  const QSeries d = delta(N);
  const auto tau = oracle::delta_product(static_cast<std::size_t>(N));
  CHECK(d.valuation() == 1);
  for (std::int64_t n = 1; n <= N; ++n) CHECK(d.coeff(n) == Rational(tau[static_cast<std::size_t>(n)]));
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);

  const QSeries j = jinv(N);
  CHECK(j.valuation() == -1);
  CHECK(j.precision() >= N);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.coeff(2) == 21493760);
  CHECK((j * delta(N + 1)).truncated(N) == series_pow(eisenstein(4, N), 3).truncated(N));
}

TEST_CASE("tilde_e, b_exp, h_poly") {
  const std::int64_t N = 20;
  const QSeries e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  CHECK(tilde_e(0, N) == QSeries::constant(1, N));
  CHECK(tilde_e(12, N) == QSeries::constant(1, N));
  CHECK(tilde_e(10, N) == e4 * e6);
  CHECK(tilde_e(14, N) == e4 * e4 * e6);
  CHECK(tilde_e(4, N) == e4);
  CHECK(tilde_e(6, N) == e6);
  CHECK(tilde_e(8, N) == e4 * e4);
  CHECK(b_exp(10) == 0);
  CHECK(b_exp(12) == 1);
  CHECK(b_exp(14) == 0);
  CHECK(b_exp(24) == 2);
  CHECK(b_exp(26) == 1);
  CHECK(h_poly(12) == RPoly::constant(1));
  CHECK(h_poly(16) == RPoly::x_minus(0));
  CHECK(h_poly(22) == RPoly::x_minus(0) * RPoly::x_minus(1728));
  CHECK(h_poly(14) == RPoly::x_minus(0) * RPoly::x_minus(0) * RPoly::x_minus(1728));
  CHECK(h_poly(18) == RPoly::x_minus(1728));
  CHECK(h_poly(20) == RPoly::x_minus(0) * RPoly::x_minus(0));
}

TEST_CASE("faber polynomials") {
  CHECK(faber(0, 10).poly == RPoly::constant(1));
  CHECK(faber(1, 10).poly.to_string() == "x - 744");
  CHECK(faber(2, 10).poly.to_string() == "x^2 - 1488*x + 159768");

  const std::int64_t N = 40;
  const QSeries j = jinv(N + 35);
  const auto table = faber_polys(30);
  for (int n = 0; n <= 30; ++n) {
    const Faber f = faber(n, N);
    CHECK(f.poly.is_monic());
    CHECK(f.poly.degree() == n);
    CHECK(table[static_cast<std::size_t>(n)] == f.poly);
    if (n > 0) CHECK(f.series.coeff(0) == 0);
    CHECK(f.series.coeff(-n) == 1);
    for (int e = -n + 1; e < 0; ++e) CHECK(f.series.coeff(e) == 0);
    // J_n(j) reproduces j_n through its precision.
    QSeries acc = QSeries::zero(N);
    QSeries jp = QSeries::constant(1, N + 35);
    for (int d = 0; d <= n; ++d) {
      acc = acc + jp.scaled(f.poly.coeff(d));
      jp = jp * j;
    }
    const std::int64_t P = std::min(acc.precision(), f.series.precision());
    CHECK(acc.truncated(P) == f.series.truncated(P));
  }
}

TEST_CASE("faber compatibility with the weight 0 Hecke operator") {
  const std::int64_t N = 400;
  const QSeries j1 = faber(1, N).series;
  for (int n = 2; n <= 20; ++n) {
    const QSeries t = hecke_apply(j1, 0, n).scaled(n);
    const QSeries jn = faber(n, t.precision()).series;
    CHECK(t == jn);
  }
}

TEST_CASE("cusp eigenforms") {
  const QSeries d = cusp_eigenform(12, 40);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(cusp_eigenform(16, 10).coeff(2) == 216);
  CHECK(cusp_eigenform(16, 10) == (delta(10) * eisenstein(4, 10)));
  for (int m = 1; m <= 30; ++m)
    for (int n = 1; m * n <= 40 && n <= 30; ++n)
      if (std::gcd(m, n) == 1) CHECK(d.coeff(m * n) == d.coeff(m) * d.coeff(n));
  for (int k : {12, 16, 18, 20, 22, 26}) CHECK(is_dim_one_cusp_weight(k));
  CHECK_FALSE(is_dim_one_cusp_weight(24));
  CHECK_THROWS_AS(cusp_eigenform(24, 10), Error);
  CHECK_THROWS_AS(cusp_eigenform(14, 10), Error);
}

TEST_CASE("divisor polynomial") {
  const std::int64_t N = 30;
  CHECK(divisor_polynomial(delta(N), 12) == RPoly::constant(1));
  CHECK(divisor_polynomial(eisenstein(4, N), 4) == RPoly::x_minus(0));
  CHECK(divisor_polynomial(series_pow(eisenstein(4, N), 3), 12) == RPoly::x_minus(0));
  CHECK(divisor_polynomial(eisenstein(12, N), 12).degree() == 1);
  // E_6^2 = E_4^3 - 1728 Delta, so its divisor polynomial is x - 1728.
  CHECK(divisor_polynomial(series_pow(eisenstein(6, N), 2), 12) == RPoly::x_minus(1728));
  try {
    divisor_polynomial(eisenstein(4, N), 12);
    FAIL("expected InexactDivision");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InexactDivision);
  }
}
