#include "heckezeros/arcbounds.hpp"
#include "heckezeros/modforms.hpp"
#include "heckezeros/roots.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hz;

namespace {
constexpr double kPi = std::numbers::pi;

RPoly from_roots(const std::vector<Rational>& roots) {
  RPoly p = RPoly::constant(1);
  for (const auto& r : roots) p = p * RPoly::x_minus(r);
  return p;
}
}  // namespace

TEST_CASE("sturm isolation") {
  const RPoly p = from_roots({0, 1728});
  const auto iv = sturm_isolate(p, 0, 1728);
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].exact());
  CHECK(iv[0].lo == 0);
  CHECK(iv[1].exact());
  CHECK(iv[1].lo == 1728);

  CHECK(sturm_isolate(RPoly({1, 0, 1}), -100, 100).empty());
  CHECK(sturm_isolate(faber(5, 10).poly, 0, 1728).size() == 5);
  CHECK_THROWS_AS(sturm_isolate(RPoly(), 0, 1), Error);

  // repeated roots are reported once
  const auto rep = sturm_isolate(from_roots({3, 3, 5, Rational(1, 3)}), -10, 10);
  CHECK(rep.size() == 3);
}

TEST_CASE("sturm isolation against known roots") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-400, 400), den(1, 9), count(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) roots.push_back(make_rational(num(rng), den(rng)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    // an irreducible quadratic factor contributes no real roots
    const RPoly p = from_roots(roots) * RPoly({7, 1, 1});
    const auto iv = sturm_isolate(p, -50, 50);
    std::vector<Rational> inside;
    for (const auto& r : roots)
      if (r >= -50 && r <= 50) inside.push_back(r);
    REQUIRE(iv.size() == inside.size());
    for (std::size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv[i].lo <= inside[i]);
      CHECK(inside[i] <= iv[i].hi);
      if (!iv[i].exact()) {
        CHECK(iv[i].lo < iv[i].hi);
        CHECK(sign_at(p, iv[i].lo) != sign_at(p, iv[i].hi));
      }
    }
    CHECK(count_distinct_roots(p, -50, 50) == static_cast<int>(inside.size()));
  }
}

TEST_CASE("simplicity") {
  CHECK_FALSE(all_roots_simple(from_roots({1, 1})));
  CHECK(all_roots_simple(from_roots({0, 1728})));
  const WeakEigenformSpec r = builtin_R_spec();
  const auto table = faber_polys(20);
  for (int n = 2; n <= 20; ++n) {
    const RPoly p = hecke_polynomial(r, n, table).poly;
    CHECK(all_roots_simple(p));
    // below the guaranteed threshold the same holds empirically
    CHECK(count_distinct_roots(p, 0, 1728) == n);
  }
}

TEST_CASE("refine_root") {
  CHECK(refine_root(RPoly({-2, 0, 1}), {1, 2}, 1e-10) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(std::abs(refine_root(RPoly({0, 1}), {-1, 1}, 1e-12)) < 1e-12);
  CHECK(refine_root(RPoly::x_minus(1728), {1728, 1728}) == 1728);
  CHECK(refine_root(RPoly::x_minus(1728), {1000, 2000}) == doctest::Approx(1728));
}

TEST_CASE("theta pullback") {
  CHECK(theta_pullback(1728) == kPi / 2);
  CHECK(theta_pullback(0) == kPi / 3);
  CHECK_THROWS_AS(theta_pullback(-1), Error);
  CHECK_THROWS_AS(theta_pullback(1728.5), Error);
  double prev = 0;
  for (double x = 1; x < 1728; x += 13.7) {
    const double t = theta_pullback(x);
    CHECK(t > prev);
    prev = t;
    CHECK(std::abs(j_on_arc(t) - x) < 1e-8 * 1728);
    CHECK(std::abs(oracle::j_direct(t).real() - x) < 1e-7 * 1728);
  }
}

TEST_CASE("discrepancy") {
  for (int N : {5, 20, 100}) {
    std::vector<double> pts;
    for (int i = 0; i < N; ++i) pts.push_back(kPi / 3 + (i + 0.5) / N * kPi / 6);
    CHECK(discrepancy(pts) == doctest::Approx(0.5 / N));
    std::vector<double> left;
    for (int i = 0; i < N; ++i) left.push_back(kPi / 3 + static_cast<double>(i) / N * kPi / 6);
    CHECK(discrepancy(left) == doctest::Approx(1.0 / N));
  }
  CHECK(discrepancy(std::vector<double>(10, 1.3)) >= 0.5);
  CHECK_THROWS_AS(discrepancy({}), Error);
  CHECK(discrepancy_x({0, 864, 1728}) == doctest::Approx(1.0 / 3));
}

TEST_CASE("root analysis of P_n(R)") {
  const WeakEigenformSpec r = builtin_R_spec();
  for (int n : {11, 15}) {
    const RootReport rep = analyze_roots(hecke_polynomial(r, n).poly);
    CHECK(rep.count_in_interval == n);
    CHECK(rep.degree == n);
    CHECK(rep.all_simple);
    CHECK(one_per_subinterval(r, n));
    // every root is accounted for: interior ones plus the two endpoint zeros
    const auto [first, last] = sign_interval_indices(n, 12);
    CHECK((last - first + 1) + 2 == rep.count_in_interval);
  }
  const RootReport two = analyze_roots(hecke_polynomial(r, 2).poly);
  REQUIRE(two.refined.size() == 2);
  CHECK(two.refined[0] == 0);
  CHECK(two.refined[1] == 1728);
}
