#include "heckezeros/heckepoly.hpp"
#include "heckezeros/modforms.hpp"
#include "heckezeros/numeric.hpp"

#include <doctest.h>

using namespace hz;

TEST_CASE("builtin R spec") {
  const WeakEigenformSpec r = builtin_R_spec();
  CHECK(r.k == 12);
  CHECK(r.m == 1);
  REQUIRE(r.principal.size() == 1);
  CHECK(r.principal[0] == 1);
  CHECK(r.constant == Rational(-65520, 691));
  CHECK(r.constant == Rational(24) / bernoulli(12));
  CHECK(eigenvalue(r.eigenvalues, 2) == -24);
  CHECK(r.principal_l1() == 1);
  CHECK(hecke_degree(r, 7) == 7);
}

TEST_CASE("golden example P_2(R)") {
  const WeakEigenformSpec r = builtin_R_spec();
  const Rational c0 = r.constant;
  // n^{k-1} F|T(n) at q^0 carries (2^11 + 1) c(0); subtracting a(2) c(0) = -24 c(0) gives 2073 c(0).
  const auto scaled = scaled_hecke_principal(r.lower(), 12, 1, 2);
  CHECK(scaled[2] == 2049 * c0);
  CHECK(2073 == 3 * 691);
  CHECK(2073 * c0 == -196560);

  const QSeries h = hn_lower_part(r, 2);
  CHECK(h.precision() == 0);
  CHECK(h.coeff(-2) == 1);
  CHECK(h.coeff(-1) == -240);
  CHECK(h.coeff(0) == -338328);
  CHECK(Rational(-196560 - 6336 - 135432) == -338328);

  const HeckePolyResult p = hecke_polynomial(r, 2);
  CHECK(p.poly == RPoly({0, -1728, 1}));
  CHECK(p.poly.to_string() == "x^2 - 1728*x");
  CHECK(p.degree == 2);
  CHECK(p.zero_at_0);
  CHECK(p.zero_at_1728);
}

TEST_CASE("P_n(R) is monic of degree n") {
  const WeakEigenformSpec r = builtin_R_spec();
  const auto table = faber_polys(30);
  for (int n = 2; n <= 30; ++n) {
    const HeckePolyResult p = hecke_polynomial(r, n, table);
    CHECK(p.poly.is_monic());
    CHECK(p.degree == n);
    CHECK(p.poly.degree() == n);
    // Predicted endpoint zeros {0, 1728} for k = 12 hold for every n.
    CHECK(p.zero_at_0);
    CHECK(p.zero_at_1728);
  }
  CHECK(hecke_polynomial(r, 3).poly == RPoly::x_minus(0) * RPoly::x_minus(768) * RPoly::x_minus(1728));
}

TEST_CASE("P_n(j) reproduces the lower part of H_n") {
  const WeakEigenformSpec r = builtin_R_spec();
  for (int n = 2; n <= 8; ++n) {
    const RPoly p = hecke_polynomial(r, n).poly;
    const QSeries j = jinv(n + 5);
    QSeries s = QSeries::zero(5);
    QSeries jp = QSeries::constant(1, 5 + n);
    for (int d = 0; d <= p.degree(); ++d) {
      s = s + jp.scaled(p.coeff(d));
      jp = jp * j;
    }
    CHECK(s.truncated(0) == hn_lower_part(r, n));
  }
}

TEST_CASE("numeric consistency of P_n(j) with the series side") {
  const WeakEigenformSpec r = builtin_R_spec();
  const int n = 5;
  const RPoly p = hecke_polynomial(r, n).poly;
  const std::int64_t N = 60;
  const QSeries j = jinv(N + n);
  QSeries s = QSeries::zero(N);
  QSeries jp = QSeries::constant(1, N + n);
  for (int d = 0; d <= p.degree(); ++d) {
    s = s + jp.scaled(p.coeff(d));
    jp = jp * j;
  }
  for (int i = 0; i < 10; ++i) {
    const double theta = std::numbers::pi / 3 + (i + 0.5) * (std::numbers::pi / 6) / 10;
    const auto q = nome_on_arc(theta);
    const auto series_side = series_eval_numeric(s, q);
    const auto jv = series_eval_numeric(j, q).value;
    std::complex<double> poly_side = 0;
    for (int d = p.degree(); d >= 0; --d) poly_side = poly_side * jv + to_double(p.coeff(d));
    CHECK(std::abs(series_side.value - poly_side) < 1e-6 * std::abs(poly_side) + series_side.tail_bound);
  }
}

TEST_CASE("other dimension one weights") {
  for (int k : {16, 18, 20, 22, 26}) {
    const WeakEigenformSpec spec = builtin_poincare_spec(k);
    CHECK(spec.constant == Rational(2 * k) / bernoulli(k));
    for (int n = 2; n <= 8; ++n) {
      const HeckePolyResult p = hecke_polynomial(spec, n);
      CHECK(p.poly.is_monic());
      CHECK(p.degree == n - b_exp(k - 2));
    }
  }
  CHECK(builtin_poincare_spec(12).constant == builtin_R_spec().constant);
}

TEST_CASE("user eigenvalue lists") {
  WeakEigenformSpec spec = builtin_R_spec();
  const QSeries d = delta(12);
  std::map<std::int64_t, Rational> vals;
  for (int n = 1; n <= 12; ++n) vals[n] = d.coeff(n);
  spec.eigenvalues = EigenvalueSource::from_list(vals);
  CHECK(hecke_polynomial(spec, 7).poly == hecke_polynomial(builtin_R_spec(), 7).poly);
  CHECK_THROWS_AS(hecke_polynomial(spec, 13), Error);
}

TEST_CASE("wrong eigenvalue breaks the theorem") {
  WeakEigenformSpec spec = builtin_R_spec();
  spec.eigenvalues = EigenvalueSource::from_list({{2, -23}});
  // The polynomial is still computed from the lower part, but it no longer has
  // the endpoint zeros forced by the divisor.
  const HeckePolyResult p = hecke_polynomial(spec, 2);
  CHECK_FALSE(p.zero_at_0);
}

TEST_CASE("spec validation") {
  WeakEigenformSpec spec = builtin_R_spec();
  spec.principal = {2};
  CHECK_THROWS_AS(validate(spec), Error);
  spec = builtin_R_spec();
  spec.k = 11;
  CHECK_THROWS_AS(validate(spec), Error);
  spec = builtin_R_spec();
  spec.m = 2;
  CHECK_THROWS_AS(validate(spec), Error);
  spec = builtin_R_spec();
  spec.eigenvalues = EigenvalueSource::builtin(16);
  CHECK_THROWS_AS(validate(spec), Error);
}

TEST_CASE("endpoint zeros") {
  using E = ArcEndpoint;
  CHECK(predicted_endpoint_zeros(12) == std::vector<E>{E::Rho, E::I});
  CHECK(predicted_endpoint_zeros(14).empty());
  CHECK(predicted_endpoint_zeros(16) == std::vector<E>{E::Rho, E::I});
  CHECK(predicted_endpoint_zeros(18) == std::vector<E>{E::Rho});
  CHECK(predicted_endpoint_zeros(20) == std::vector<E>{E::I});
  CHECK(predicted_endpoint_zeros(22) == std::vector<E>{E::Rho});

  const WeakEigenformSpec r = builtin_R_spec();
  for (int n = 2; n <= 30; ++n) {
    const EndpointReport rep = endpoint_report(r, n);
    CHECK(rep.actual_zero_at_0);
    CHECK(rep.actual_zero_at_1728);
    CHECK(rep.predicted_Z.size() == 2);
    // Surfaced, not asserted against the actual zeros.
    CHECK_FALSE(rep.congruence_predicts_0);
    CHECK_FALSE(rep.congruence_predicts_1728);
  }
  for (int k : {16, 18, 20, 22, 26}) {
    const WeakEigenformSpec spec = builtin_poincare_spec(k);
    const auto pred = predicted_endpoint_zeros(k);
    const bool rho = std::find(pred.begin(), pred.end(), E::Rho) != pred.end();
    const bool i = std::find(pred.begin(), pred.end(), E::I) != pred.end();
    for (int n = 2; n <= 6; ++n) {
      const EndpointReport rep = endpoint_report(spec, n);
      if (rho) CHECK(rep.actual_zero_at_0);
      if (i) CHECK(rep.actual_zero_at_1728);
    }
  }
}
