#pragma once

#include "heckezeros/heckepoly.hpp"
#include "heckezeros/rpoly.hpp"

#include <vector>

namespace hz {

// [lo, hi] containing exactly one real root; lo == hi for an exact rational root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

// Sturm chain of a polynomial, each member stored as a primitive integer
// polynomial (a positive multiple of the classical remainder).
class SturmSequence {
 public:
  explicit SturmSequence(const RPoly& p);

  // Sign variations at x, zeros dropped.
  int variations(const Rational& x) const;
  // Distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  const std::vector<std::vector<Integer>>& chain() const { return chain_; }

 private:
  std::vector<std::vector<Integer>> chain_;
};

int sign_at(const RPoly& p, const Rational& x);

// All real roots in [lo, hi], ascending, each in its own isolating interval.
std::vector<IsolatingInterval> sturm_isolate(const RPoly& p, const Rational& lo, const Rational& hi);

// Number of distinct real roots in [lo, hi].
int count_distinct_roots(const RPoly& p, const Rational& lo, const Rational& hi);

// gcd(P, P') is constant.
bool all_roots_simple(const RPoly& p);

// Bisection of an isolating interval down to width <= tol; returns the midpoint.
double refine_root(const RPoly& p, const IsolatingInterval& iv, double tol = 1e-12);

// j(e^{i theta}) on the arc (real part), double precision.
double j_on_arc(double theta);

// The theta in [pi/3, pi/2] with j(e^{i theta}) = x; j increases along the arc
// from 0 at pi/3 to 1728 at pi/2. Throws OutOfRange unless 0 <= x <= 1728.
double theta_pullback(double x);

// Star discrepancy of (theta - pi/3)/(pi/6) against the uniform law on [0,1].
double discrepancy(std::vector<double> thetas);
// Same for x/1728 (reference only).
double discrepancy_x(std::vector<double> xs);

struct RootReport {
  std::vector<IsolatingInterval> intervals;
  std::vector<double> refined;   // x
  std::vector<double> thetas;    // pullbacks
  int degree = 0;
  int count_in_interval = 0;     // distinct roots in [0, 1728]
  bool all_simple = false;
};

RootReport analyze_roots(const RPoly& p);

// True iff every subinterval (g^{-1}(pi(i+1)), g^{-1}(pi i)) holds exactly
// one of the given root pullbacks.
bool one_per_subinterval(std::int64_t mn, int k, const std::vector<double>& thetas);
bool one_per_subinterval(const WeakEigenformSpec& spec, std::int64_t n);

}  // namespace hz
