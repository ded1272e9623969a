#include "heckezeros/specialfn.hpp"

#include "heckezeros/error.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <cstdlib>
#include <string>

namespace hz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Neumaier compensated sum in extended precision.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

std::int64_t pos_mod(std::int64_t a, std::int64_t c) {
  std::int64_t r = a % c;
  return r < 0 ? r + c : r;
}

// Returns the inverse of v mod c, or 0 when gcd(v, c) != 1.
std::int64_t mod_inverse(std::int64_t v, std::int64_t c) {
  std::int64_t r0 = c, r1 = v, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return 0;
  return pos_mod(s0, c);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

enum class BesselKind { I, J };

// Upper bound for |B_nu(x)|: (x/2)^nu/nu!, times e^{x^2/(4(nu+1))} for I.
double bessel_majorant(int nu, double x, BesselKind kind) {
  const double base = std::pow(x / 2, nu) / factorial(nu);
  return kind == BesselKind::I ? base * std::exp(x * x / (4.0 * (nu + 1))) : base;
}

// sum_{c >= 1} K(m,n,c)/c * B_nu(scale/c), truncated at cmax. The reported
// error covers rounding plus the discarded tail. For nu >= 2, |K(m,n,c)| < c
// and the majorant give the rigorous tail bound M(scale/c)(1 + c/(nu-1)) for
// all terms from c on; the loop stops early once that is negligible. For
// nu = 1 the series is only conditionally convergent and the tail is the
// Weil-bound estimate sqrt(g) (scale/2) sum_{c > cmax} d(c) c^{-3/2}.
Real kloosterman_bessel_sum(std::int64_t m, std::int64_t n, int nu, double scale, BesselKind kind, std::int64_t cmax) {
  if (cmax < 1) throw Error(Errc::OutOfRange, "cmax must be >= 1");
  CompensatedSum sum;
  double err = 0.0;
  bool stopped = false;
  for (std::int64_t c = 1; c <= cmax; ++c) {
    const double x = scale / static_cast<double>(c);
    if (nu >= 2 && c > 1) {
      const double tail = bessel_majorant(nu, x, kind) * (1.0 + static_cast<double>(c) / (nu - 1));
      if (tail < 0x1p-64 * std::fabs(static_cast<double>(sum.value()))) {
        err += tail;
        stopped = true;
        break;
      }
    }
    const Real b = kind == BesselKind::I ? bessel_i(nu, x) : bessel_j(nu, x);
    const Real kl = kloosterman(m, n, c);
    sum.add(kl.value / static_cast<double>(c) * b.value);
    err += (std::fabs(kl.value) * b.abs_err + kl.abs_err * std::fabs(b.value)) / static_cast<double>(c);
  }
  if (!stopped) {
    const double C = static_cast<double>(cmax) + 1;
    const double x = scale / C;
    if (nu >= 2) {
      err += bessel_majorant(nu, x, kind) * (1.0 + C / (nu - 1));
    } else {
      const double g = static_cast<double>(std::max<std::int64_t>(1, std::gcd(std::llabs(m), std::llabs(n))));
      const double divisor_tail = 2.0 * (std::log(C) + 2.0 + 2.0 * std::numbers::egamma) / std::sqrt(C);
      const double growth = kind == BesselKind::I ? std::exp(x * x / 8) : 1.0;
      err += std::sqrt(g) * (scale / 2) * growth * divisor_tail;
    }
  }
  const double value = static_cast<double>(sum.value());
  err += 4 * kEps * std::fabs(value);
  return {value, err};
}

void require_even(int k) {
  if (k % 2 != 0 || k < 2) throw Error(Errc::BadWeight, "weight must be even and >= 2, got " + std::to_string(k));
}

}  // namespace

Real kloosterman(std::int64_t m, std::int64_t n, std::int64_t c) {
  if (c < 1) throw Error(Errc::OutOfRange, "Kloosterman modulus must be >= 1");
  if (c == 1) return {1.0, 0.0};
  const std::int64_t mr = pos_mod(m, c);
  const std::int64_t nr = pos_mod(n, c);
  CompensatedSum sum;
  std::int64_t units = 0;
  const long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(c);
  for (std::int64_t v = 1; v < c; ++v) {
    const std::int64_t inv = mod_inverse(v, c);
    if (inv == 0) continue;
    ++units;
    const std::int64_t r = (mr * inv + nr * v) % c;
    sum.add(std::cos(step * static_cast<long double>(r)));
  }
  return {static_cast<double>(sum.value()), 4 * kEps * static_cast<double>(units)};
}

Real bessel_i(int nu, double x) {
  if (x < 0) throw Error(Errc::NegativeArgument, "I_nu(x) needs x >= 0");
  if (nu < 0) throw Error(Errc::OutOfRange, "order must be >= 0");
  if (x > 700) throw Error(Errc::OutOfRange, "I_nu(x) overflows for x > 700");
  if (x == 0) return {nu == 0 ? 1.0 : 0.0, 0.0};
  // All terms are positive, so the power series is accurate for every x.
  const double half = x / 2;
  const double half_sq = half * half;
  double term = std::pow(half, nu) / factorial(nu);
  if (term == 0.0) return {0.0, std::numeric_limits<double>::denorm_min()};
  long double sum = 0.0L;
  int m = 0;
  for (;; ++m) {
    sum += term;
    const double ratio = half_sq / ((m + 1.0) * (m + 1.0 + nu));
    const double next = term * ratio;
    if (ratio < 0.5 && next < 1e-19 * static_cast<double>(sum)) {
      const double tail = next / (1.0 - ratio);
      sum += next;
      const double value = static_cast<double>(sum);
      return {value, tail + (m + 4) * kEps * value};
    }
    term = next;
  }
}

Real bessel_j(int nu, double x) {
  if (x < 0) throw Error(Errc::NegativeArgument, "J_nu(x) needs x >= 0");
  if (nu < 0) throw Error(Errc::OutOfRange, "order must be >= 0");
  if (x == 0) return {nu == 0 ? 1.0 : 0.0, 0.0};
  if (x <= 20.0) {
    const double half = x / 2;
    const double half_sq = half * half;
    long double term = std::pow(static_cast<long double>(half), nu) / factorial(nu);
    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    for (int m = 0;; ++m) {
      sum += term;
      abs_sum += std::fabs(term);
      const long double ratio = half_sq / ((m + 1.0L) * (m + 1.0L + nu));
      const long double next = -term * ratio;
      if (ratio < 0.5L && std::fabs(next) < 1e-22L * abs_sum) {
        const double tail = static_cast<double>(std::fabs(next) / (1.0L - ratio));
        return {static_cast<double>(sum), tail + static_cast<double>((m + 4) * LDBL_EPSILON * abs_sum) + kEps * std::fabs(static_cast<double>(sum))};
      }
      term = next;
    }
  }
  // J_nu(x) = (1/2pi) int_0^{2pi} cos(nu t - x sin t) dt; the trapezoid rule
  // converges geometrically for this periodic analytic integrand.
  const int points = static_cast<int>(2 * (x + nu)) + 64;
  CompensatedSum sum;
  const long double h = 2.0L * std::numbers::pi_v<long double> / points;
  for (int i = 0; i < points; ++i) {
    const long double t = h * i;
    sum.add(std::cos(nu * t - x * std::sin(t)));
  }
  const double value = static_cast<double>(sum.value() / points);
  return {value, 8 * kEps * (1.0 + x)};
}

double trunc_exp(int j, double x) {
  double term = 1.0, sum = 0.0;
  for (int n = 0; n <= j; ++n) {
    sum += term;
    term *= x / (n + 1);
  }
  return sum;
}

double exp_tail_fraction(int j, double x) {
  if (x <= 0) return 0.0;
  if (x > j + 40.0) return 1.0 - std::exp(-x) * trunc_exp(j, x);
  // e^{-x} sum_{i>j} x^i/i!
  double term = std::exp(-x);
  for (int i = 1; i <= j + 1; ++i) term *= x / i;
  double sum = 0.0;
  for (int i = j + 1;; ++i) {
    sum += term;
    term *= x / (i + 1);
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

Real whittaker_m_closed(int kappa, double x) {
  if (!(x > 0)) throw Error(Errc::NonpositiveArgument, "M_{kappa,kappa+1/2}(x) needs x > 0");
  if (kappa < 0) throw Error(Errc::OutOfRange, "kappa must be >= 0");
  const int top = 2 * kappa;
  if (x < top + 40.0) {
    // (2kappa+1)! e^{-x/2} (e^x - e_{2kappa}(x)) / x^kappa
    //   = e^{-x/2} x^{kappa+1} sum_i x^i (2kappa+1)!/(2kappa+1+i)!
    long double term = 1.0L, sum = 0.0L;
    int i = 0;
    for (;; ++i) {
      sum += term;
      term *= x / (top + 2.0L + i);
      if (term < 1e-21L * sum) break;
    }
    const double value = static_cast<double>(std::exp(-x / 2.0L) * std::pow(static_cast<long double>(x), kappa + 1) * sum);
    return {value, (i + 8) * kEps * value};
  }
  const double value = factorial(top + 1) * (std::exp(x / 2) - std::exp(-x / 2) * trunc_exp(top, x)) / std::pow(x, kappa);
  return {value, 16 * kEps * value};
}

Real poincare_cplus(int k, std::int64_t l, std::int64_t n, std::int64_t cmax) {
  require_even(k);
  if (l < 1 || n < 1) throw Error(Errc::OutOfRange, "l and n must be >= 1");
  // i^{2-k} = (-1)^{(k-2)/2} for even k.
  const double sign = ((k - 2) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double pref = 2 * kPi * sign * std::pow(static_cast<double>(l) / static_cast<double>(n), (k - 1) / 2.0);
  const double scale = 4 * kPi * std::sqrt(static_cast<double>(l) * static_cast<double>(n));
  const Real s = kloosterman_bessel_sum(-l, n, k - 1, scale, BesselKind::I, cmax);
  return {pref * s.value, std::fabs(pref) * s.abs_err};
}

Real poincare_cminus(int k, std::int64_t l, std::int64_t n, std::int64_t cmax) {
  require_even(k);
  if (l < 1 || n < 1) throw Error(Errc::OutOfRange, "l and n must be >= 1");
  const double sign = ((k - 2) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double pref = 2 * kPi * sign * std::pow(static_cast<double>(l) / static_cast<double>(n), (k - 1) / 2.0);
  const double scale = 4 * kPi * std::sqrt(static_cast<double>(l) * static_cast<double>(n));
  const Real s = kloosterman_bessel_sum(-l, -n, k - 1, scale, BesselKind::J, cmax);
  return {pref * s.value, std::fabs(pref) * s.abs_err};
}

Real poincare_const(int k, std::int64_t l, std::int64_t cmax) {
  require_even(k);
  if (l < 1) throw Error(Errc::OutOfRange, "l must be >= 1");
  if (cmax < 1) throw Error(Errc::OutOfRange, "cmax must be >= 1");
  // -(2 pi i)^k l^{k-1} / Gamma(k), with i^k = (-1)^{k/2}.
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  const double pref = -sign * std::pow(2 * kPi, k) * std::pow(static_cast<double>(l), k - 1) / factorial(k - 1);
  // K(-l,0,c) is a Ramanujan sum, |K| <= gcd(c,l) <= l, so the terms from c
  // on sum to at most l (c^-k + c^{1-k}/(k-1)).
  auto tail_from = [&](double c) { return static_cast<double>(l) * (std::pow(c, -k) + std::pow(c, 1 - k) / (k - 1)); };
  CompensatedSum sum;
  double err = 0.0;
  bool stopped = false;
  for (std::int64_t c = 1; c <= cmax; ++c) {
    const double tail = tail_from(static_cast<double>(c));
    if (c > 1 && tail < 0x1p-64 * std::fabs(static_cast<double>(sum.value()))) {
      err += tail;
      stopped = true;
      break;
    }
    const Real kl = kloosterman(-l, 0, c);
    const double ck = std::pow(static_cast<double>(c), k);
    sum.add(kl.value / ck);
    err += kl.abs_err / ck;
  }
  if (!stopped) err += tail_from(static_cast<double>(cmax) + 1);
  const double value = static_cast<double>(sum.value());
  err += 4 * kEps * std::fabs(value);
  return {pref * value, std::fabs(pref) * err};
}

Real mock_delta_coeff(std::int64_t n, std::int64_t cmax) {
  if (n < 1) throw Error(Errc::OutOfRange, "n must be >= 1");
  const double pref = -2 * kPi * factorial(11) * std::pow(static_cast<double>(n), -5.5);
  const Real s = kloosterman_bessel_sum(-1, n, 11, 4 * kPi * std::sqrt(static_cast<double>(n)), BesselKind::I, cmax);
  return {pref * s.value, std::fabs(pref) * s.abs_err};
}

}  // namespace hz
