#pragma once

#include "heckezeros/heckepoly.hpp"
#include "heckezeros/numeric.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace hz {

// f_l(theta) = 2 (1 - e^{-x} e_{k-2}(x)) cos((k-2)theta/2 + 2 pi l cos theta),
// x = 4 pi l sin theta.
double f_damped(std::int64_t l, int k, double theta);
double damping_factor(std::int64_t l, int k, double theta);

// g_l(theta) = (k-2) theta / 2 + 2 pi l cos theta, l = mn.
double g_phase(std::int64_t mn, int k, double theta);
// Inverse of g on [pi/3, pi/2] by bisection to 1e-12 radians. Throws
// NotMonotone unless pi sqrt(3) mn > (k-2)/2, TargetOutOfRange if the target
// lies outside [g(pi/2), g(pi/3)].
double g_inverse(std::int64_t mn, int k, double target);

// C_F = max{80 m^{k-1} sum |c(-l)|, 1} / 4, exactly.
Rational c_constant(const WeakEigenformSpec& spec);
// Least n >= 7 with C_F n^{k-1} exp(-pi n sqrt(3)/2) < 1.
std::int64_t min_valid_n(const WeakEigenformSpec& spec);

double q_bound(std::int64_t l, int k, double theta);
double p_bound(std::int64_t l, int k, double theta);
double r_bound(const WeakEigenformSpec& spec, std::int64_t n, double theta);

// Constants entering the bounds above.
double stirling_ratio(int k);                           // (4 pi)^{k-1} / Gamma(k)
double epstein_partial_sum(int exponent, int radius);   // sum 1/(c^2+cd+d^2)^e, 0 < max(|c|,|d|) <= radius

struct ArcSample {
  double theta = 0;
  std::complex<double> j_val;   // j(e^{i theta})
  std::complex<double> hstar;   // H*_n(F; e^{i theta})
  // e^{(2-k) i theta/2} e^{-2 pi mn sin theta} H*; real on the arc.
  std::complex<double> normalized;
  double realness = 0;          // |Im(normalized)| / |normalized|
  double f_val = 0;             // f_{mn}(theta)
  double gap = 0;               // |normalized - f_val|
};

// Evaluates H*_n = P_n(j) / (Delta^b E~_{k-2}) on the arc in 160-digit
// arithmetic. Immutable after construction; eval() is safe to call
// concurrently.
class HStarEvaluator {
 public:
  HStarEvaluator(const WeakEigenformSpec& spec, std::int64_t n, const RPoly& poly, std::int64_t series_precision = 120);
  HStarEvaluator(const WeakEigenformSpec& spec, std::int64_t n);

  // Throws DivisorNearZero when |Delta^b E~| < 1e-12 at a point that is not a
  // tabulated zero of E~_{k-2}; at a tabulated endpoint the value is taken
  // 1e-7 radians inside the arc.
  ArcSample eval(double theta) const;

  std::int64_t mn() const { return mn_; }
  int k() const { return k_; }

 private:
  int k_;
  std::int64_t mn_;
  std::vector<HighFloat> poly_;
  QSeries j_;
  QSeries divisor_;
  std::vector<ArcEndpoint> tabulated_;
};

// Midpoint grid on [pi/3, pi/2]: theta_i = pi/3 + (i + 1/2) (pi/6) / points.
std::vector<double> theta_grid(int points);

double cosine_gap(const WeakEigenformSpec& spec, std::int64_t n, double theta);

struct SignInterval {
  std::int64_t index = 0;     // i: (g^{-1}(pi(i+1)), g^{-1}(pi i))
  double theta_lo = 0;
  double theta_hi = 0;
  double value_lo = 0;        // Re(normalized) at the endpoints
  double value_hi = 0;
  bool sign_change = false;
};

struct SignChangeReport {
  std::int64_t expected = 0;  // mn + floor((k-2)/6) - ceil((k-2)/4)
  std::int64_t found = 0;
  std::vector<SignInterval> intervals;
};

// Subinterval bounds [first, last] of i, empty when last < first.
std::pair<std::int64_t, std::int64_t> sign_interval_indices(std::int64_t mn, int k);

SignChangeReport verify_sign_changes(const HStarEvaluator& eval);
SignChangeReport verify_sign_changes(const WeakEigenformSpec& spec, std::int64_t n);

}  // namespace hz
