#include "heckezeros/arcbounds.hpp"
#include "heckezeros/modforms.hpp"
#include "heckezeros/specialfn.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hz;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLo = kPi / 3, kHi = kPi / 2;
}  // namespace

TEST_CASE("damped cosine") {
  // theta where g = pi/2 gives a zero of the cosine.
  const double t = g_inverse(5, 12, kPi / 2 + 4 * kPi);
  CHECK(std::abs(f_damped(5, 12, t)) < 1e-10);
  for (int l = 1; l <= 20; ++l)
    for (double th = kLo; th <= kHi; th += 0.01) CHECK(std::abs(f_damped(l, 12, th)) <= 2);
  for (int k = 4; k <= 60; k += 2)
    for (double x = 0.01; x < 200; x *= 1.7) {
      const double d = exp_tail_fraction(k - 2, x);
      CHECK(d >= 0);
      CHECK(d <= 1);
      // strictly below 1 whenever e^{-x} e_{k-2}(x) is visible in double
      if (std::exp(-x) * trunc_exp(k - 2, x) > 1e-15) CHECK(d < 1);
    }
}

TEST_CASE("damping factor >= 0.99 where it actually holds") {
  // Largest even k with damping >= 0.99 at theta = pi/3 (the worst point):
  // 12 for mn = 2, 20 for mn = 3, 30 for mn = 4.
  const std::vector<std::pair<int, int>> region{{2, 12}, {3, 20}, {4, 30}, {5, 38}};
  for (auto [mn, kmax] : region) {
    for (int k = 4; k <= kmax; k += 2)
      for (double th = kLo; th <= kHi + 1e-12; th += 0.005) CHECK(damping_factor(mn, k, th) >= 0.99);
    // and it fails just beyond, so the region is sharp
    CHECK(damping_factor(mn, kmax + 2, kLo) < 0.99);
  }
  for (int mn = 2; mn <= 40; ++mn) CHECK(damping_factor(mn, 12, kLo) >= 0.99);
}

TEST_CASE("phase function") {
  CHECK(g_phase(7, 12, kHi) == doctest::Approx(10 * kPi / 4));
  CHECK(g_phase(7, 12, kLo) == doctest::Approx(10 * kPi / 6 + kPi * 7));
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> th(kLo, kHi);
  for (int t = 0; t < 200; ++t) {
    const double t0 = th(rng);
    CHECK(std::abs(g_inverse(11, 12, g_phase(11, 12, t0)) - t0) < 1e-10);
  }
  // strictly decreasing when pi sqrt(3) mn > (k-2)/2
  for (int mn : {1, 2, 11}) {
    for (double t = kLo; t < kHi; t += 0.001) {
      const double deriv = 5.0 - 2 * kPi * mn * std::sin(t);
      CHECK(deriv < 0);
      CHECK(g_phase(mn, 12, t + 0.001) < g_phase(mn, 12, t));
    }
  }
  try {
    g_inverse(1, 40, 10);
    FAIL("expected NotMonotone");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMonotone);
  }
  try {
    g_inverse(11, 12, 1000);
    FAIL("expected TargetOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TargetOutOfRange);
  }
}

TEST_CASE("C_F and threshold") {
  const WeakEigenformSpec r = builtin_R_spec();
  CHECK(c_constant(r) == 20);
  CHECK(min_valid_n(r) == 11);
  // the threshold inequality, checked directly on either side of the threshold
  CHECK(20 * std::pow(10.0, 11) * std::exp(-kPi * 10 * std::sqrt(3.0) / 2) > 1);
  CHECK(20 * std::pow(11.0, 11) * std::exp(-kPi * 11 * std::sqrt(3.0) / 2) < 1);

  WeakEigenformSpec tiny = r;
  tiny.principal = {1};
  CHECK(c_constant(tiny) >= Rational(1, 4));
  WeakEigenformSpec two;
  two.k = 12;
  two.m = 2;
  two.principal = {1, Rational(-1, 2)};
  two.constant = 0;
  two.eigenvalues = EigenvalueSource::builtin(12);
  CHECK(c_constant(two) == make_rational(80 * 2048 * 3, 2 * 4));
  CHECK(min_valid_n(two) >= 7);
}

TEST_CASE("bound formulas and constants") {
  const double th = 1.3;
  const double x = kPi * 3 * std::sin(th);
  CHECK(q_bound(3, 12, th) == doctest::Approx(std::exp(2 * x) + 24 * std::exp(x) + 1.008e8 * std::pow(3.0, 11)));
  CHECK(p_bound(3, 12, th) == doctest::Approx(4 * std::exp(2 * x) + 1.008e8 * std::pow(3.0, 11)));
  const WeakEigenformSpec r = builtin_R_spec();
  const double y = kPi * 5 * std::sin(th);
  CHECK(r_bound(r, 5, th) == doctest::Approx(8 * std::pow(5.0, 6) * std::exp(y) + 2.016e8 * std::pow(5.0, 11)));

  double worst = 0;
  for (int k = 12; k <= 60; k += 2) {
    CHECK(stirling_ratio(k) <= 31294);
    worst = std::max(worst, stirling_ratio(k));
  }
  CHECK(worst > 31000);  // the constant is essentially attained
  const double eps = epstein_partial_sum(6, 200);
  CHECK(eps <= 6.0099);
  CHECK(eps > 6.0);
}

TEST_CASE("arc evaluation") {
  const WeakEigenformSpec r = builtin_R_spec();
  const HStarEvaluator ev(r, 11);
  for (double th : theta_grid(50)) {
    const ArcSample s = ev.eval(th);
    CHECK(std::abs(s.j_val.imag()) < 1e-9);
    const auto ref = oracle::j_direct(th);
    CHECK(std::abs(s.j_val - ref) < 1e-8 * std::max(1.0, std::abs(ref)));
    CHECK(s.realness < 1e-8);
    CHECK(s.gap < 2);
    // gap unchanged when the normalized value is replaced by its real part
    CHECK(std::abs(std::abs(s.normalized.real() - s.f_val) - s.gap) < 1e-8);
  }
  CHECK(ev.eval(kHi).j_val.real() == doctest::Approx(1728).epsilon(1e-6));
  CHECK(std::abs(ev.eval(kLo).j_val) < 1e-3);
  CHECK(cosine_gap(r, 11, 0.9 * kPi / 2) < 2);
  CHECK_THROWS_AS(ev.eval(0.5), Error);

  const auto grid = theta_grid(200);
  CHECK(grid.size() == 200);
  CHECK(grid.front() > kLo);
  CHECK(grid.back() < kHi);
  double max_gap = 0;
  const HStarEvaluator ev15(r, 15);
  for (double th : grid) max_gap = std::max(max_gap, ev15.eval(th).gap);
  CHECK(max_gap < 2);
}

TEST_CASE("empirical bound chain") {
  const WeakEigenformSpec r = builtin_R_spec();
  for (int n : {11, 14, 20}) {
    const HStarEvaluator ev(r, n);
    for (double th : theta_grid(40)) {
      const ArcSample s = ev.eval(th);
      const double rhs = std::exp(-2 * kPi * n * std::sin(th)) * (q_bound(n, 12, th) + r_bound(r, n, th));
      CHECK(s.gap <= rhs);
    }
  }
}

TEST_CASE("sign changes") {
  const WeakEigenformSpec r = builtin_R_spec();
  CHECK(sign_interval_indices(11, 12) == std::pair<std::int64_t, std::int64_t>{3, 11});
  const auto two = verify_sign_changes(r, 2);
  CHECK(two.expected == 0);
  for (int n = 11; n <= 14; ++n) {
    const SignChangeReport rep = verify_sign_changes(r, n);
    CHECK(rep.expected == n + 1 - 3);
    CHECK(rep.found == rep.expected);
    CHECK(rep.expected + 2 == hecke_degree(r, n));
    for (const auto& iv : rep.intervals) CHECK(iv.theta_lo < iv.theta_hi);
  }
  for (int k : {16, 18, 20, 22}) {
    const WeakEigenformSpec spec = builtin_poincare_spec(k);
    const int n = 12;
    const SignChangeReport rep = verify_sign_changes(spec, n);
    CHECK(rep.found == rep.expected);
    CHECK(rep.expected + static_cast<std::int64_t>(predicted_endpoint_zeros(k).size()) == hecke_degree(spec, n));
  }
}
