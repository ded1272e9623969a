#include "heckezeros/arcbounds.hpp"

#include "heckezeros/error.hpp"
#include "heckezeros/modforms.hpp"
#include "heckezeros/specialfn.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaLo = kPi / 3;
constexpr double kThetaHi = kPi / 2;

double endpoint_theta(ArcEndpoint e) { return e == ArcEndpoint::Rho ? kThetaLo : kThetaHi; }

}  // namespace

double damping_factor(std::int64_t l, int k, double theta) {
  return exp_tail_fraction(k - 2, 4 * kPi * static_cast<double>(l) * std::sin(theta));
}

double f_damped(std::int64_t l, int k, double theta) {
  return 2 * damping_factor(l, k, theta) * std::cos(g_phase(l, k, theta));
}

double g_phase(std::int64_t mn, int k, double theta) {
  return (k - 2) / 2.0 * theta + 2 * kPi * static_cast<double>(mn) * std::cos(theta);
}

double g_inverse(std::int64_t mn, int k, double target) {
  if (!(kPi * std::sqrt(3.0) * static_cast<double>(mn) > (k - 2) / 2.0))
    throw Error(Errc::NotMonotone, "g is not decreasing on the arc for mn = " + std::to_string(mn));
  const double g_hi = g_phase(mn, k, kThetaLo);
  const double g_lo = g_phase(mn, k, kThetaHi);
  const double slack = 1e-12 * std::max(1.0, std::fabs(g_hi));
  if (target < g_lo - slack || target > g_hi + slack)
    throw Error(Errc::TargetOutOfRange, "target outside [g(pi/2), g(pi/3)]");
  double lo = kThetaLo, hi = kThetaHi;  // g(lo) >= target >= g(hi)
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (g_phase(mn, k, mid) >= target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Rational c_constant(const WeakEigenformSpec& spec) {
  const Rational inner = Rational(80) * Rational(ipow(Integer(spec.m), static_cast<unsigned long>(spec.k - 1))) *
                         spec.principal_l1();
  return (inner > 1 ? inner : Rational(1)) / 4;
}

std::int64_t min_valid_n(const WeakEigenformSpec& spec) {
  const double log_c = std::log(to_double(c_constant(spec)));
  const double rate = kPi * std::sqrt(3.0) / 2;
  for (std::int64_t n = 7; n < 100000; ++n) {
    if (log_c + (spec.k - 1) * std::log(static_cast<double>(n)) - rate * static_cast<double>(n) < 0) return n;
  }
  throw Error(Errc::OutOfRange, "no admissible n below 100000");
}

double q_bound(std::int64_t l, int k, double theta) {
  const double x = kPi * static_cast<double>(l) * std::sin(theta);
  return std::exp(2 * x) + 8.0 * static_cast<double>(l) * std::exp(x) +
         1.008e8 * std::pow(static_cast<double>(l), k - 1);
}

double p_bound(std::int64_t l, int k, double theta) {
  const double x = kPi * static_cast<double>(l) * std::sin(theta);
  return 4 * std::exp(2 * x) + 1.008e8 * std::pow(static_cast<double>(l), k - 1);
}

double r_bound(const WeakEigenformSpec& spec, std::int64_t n, double theta) {
  const double m = spec.m;
  const double nn = static_cast<double>(n);
  const int k = spec.k;
  const double first = 8 * std::pow(m, k - 2) * std::pow(nn, k / 2.0) * std::exp(kPi * (2 * m - 1) * nn * std::sin(theta));
  const double second = 2.016e8 * std::pow(m * nn, k - 1);
  return (first + second) * to_double(spec.principal_l1());
}

double stirling_ratio(int k) {
  double r = 1.0;
  for (int i = 1; i <= k - 1; ++i) r *= 4 * kPi / i;
  return r;
}

double epstein_partial_sum(int exponent, int radius) {
  // Summed shell by shell, outermost first, so small terms accumulate first.
  double total = 0.0;
  for (int r = radius; r >= 1; --r) {
    double shell = 0.0;
    for (int c = -r; c <= r; ++c) {
      for (int d = -r; d <= r; ++d) {
        if (std::max(std::abs(c), std::abs(d)) != r) continue;
        const double form = static_cast<double>(c) * c + static_cast<double>(c) * d + static_cast<double>(d) * d;
        shell += std::pow(form, -exponent);
      }
    }
    total += shell;
  }
  return total;
}

HStarEvaluator::HStarEvaluator(const WeakEigenformSpec& spec, std::int64_t n, const RPoly& poly,
                               std::int64_t series_precision)
    : k_(spec.k), mn_(spec.m * n), tabulated_(predicted_endpoint_zeros(spec.k)) {
  poly_.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) poly_.push_back(to_real<HighFloat>(c));
  const std::int64_t N = std::max<std::int64_t>(series_precision, 40);
  j_ = jinv(N);
  const int b = b_exp(spec.k - 2);
  divisor_ = (series_pow(delta(N + b + 1), static_cast<unsigned>(b)) * tilde_e(spec.k - 2, N + b + 1)).truncated(N);
}

HStarEvaluator::HStarEvaluator(const WeakEigenformSpec& spec, std::int64_t n)
    : HStarEvaluator(spec, n, hecke_polynomial(spec, n).poly) {}

ArcSample HStarEvaluator::eval(double theta) const {
  if (theta < kThetaLo - 1e-12 || theta > kThetaHi + 1e-12)
    throw Error(Errc::OutOfRange, "theta outside [pi/3, pi/2]");
  double at = theta;
  for (ArcEndpoint e : tabulated_) {
    const double t = endpoint_theta(e);
    if (std::fabs(theta - t) < 1e-9) at = e == ArcEndpoint::Rho ? t + 1e-7 : t - 1e-7;
  }
  const HighFloat th(at);
  const HighComplex q = nome_on_arc(th);
  const HighComplex j = series_eval_numeric(j_, q).value;
  const HighComplex d = series_eval_numeric(divisor_, q).value;
  if (abs(d) < HighFloat(1e-12))
    throw Error(Errc::DivisorNearZero, "Delta^b E~ vanishes numerically at theta = " + std::to_string(theta));
  HighComplex h(HighFloat(0), HighFloat(0));
  for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) h = h * j + HighComplex(*it, HighFloat(0));
  const HighComplex hstar = h / d;
  const HighFloat phase_arg = HighFloat(2 - k_) * th / 2;
  const HighFloat damp = exp(-2 * pi_value<HighFloat>() * HighFloat(mn_) * sin(th));
  const HighComplex normalized = HighComplex(cos(phase_arg), sin(phase_arg)) * hstar * damp;

  ArcSample s;
  s.theta = theta;
  s.j_val = {static_cast<double>(j.real()), static_cast<double>(j.imag())};
  s.hstar = {static_cast<double>(hstar.real()), static_cast<double>(hstar.imag())};
  s.normalized = {static_cast<double>(normalized.real()), static_cast<double>(normalized.imag())};
  const HighFloat mag = abs(normalized);
  s.realness = mag == 0 ? 0.0 : static_cast<double>(abs(normalized.imag()) / mag);
  s.f_val = f_damped(mn_, k_, at);
  s.gap = std::abs(s.normalized - std::complex<double>(s.f_val, 0.0));
  return s;
}

std::vector<double> theta_grid(int points) {
  if (points < 1) throw Error(Errc::OutOfRange, "grid needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double h = (kThetaHi - kThetaLo) / points;
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = kThetaLo + (i + 0.5) * h;
  return out;
}

double cosine_gap(const WeakEigenformSpec& spec, std::int64_t n, double theta) {
  return HStarEvaluator(spec, n).eval(theta).gap;
}

std::pair<std::int64_t, std::int64_t> sign_interval_indices(std::int64_t mn, int k) {
  const std::int64_t first = (k - 2 + 3) / 4;  // ceil((k-2)/4)
  const std::int64_t last = mn + (k - 2) / 6 - 1;
  return {first, last};
}

SignChangeReport verify_sign_changes(const HStarEvaluator& eval) {
  SignChangeReport rep;
  const int k = eval.k();
  const std::int64_t mn = eval.mn();
  rep.expected = mn + (k - 2) / 6 - (k - 2 + 3) / 4;
  const auto [first, last] = sign_interval_indices(mn, k);
  for (std::int64_t i = first; i <= last; ++i) {
    SignInterval iv;
    iv.index = i;
    iv.theta_lo = g_inverse(mn, k, kPi * static_cast<double>(i + 1));
    iv.theta_hi = g_inverse(mn, k, kPi * static_cast<double>(i));
    iv.value_lo = eval.eval(iv.theta_lo).normalized.real();
    iv.value_hi = eval.eval(iv.theta_hi).normalized.real();
    iv.sign_change = (iv.value_lo < 0) != (iv.value_hi < 0) && iv.value_lo != 0 && iv.value_hi != 0;
    if (iv.sign_change) ++rep.found;
    rep.intervals.push_back(iv);
  }
  return rep;
}

SignChangeReport verify_sign_changes(const WeakEigenformSpec& spec, std::int64_t n) {
  return verify_sign_changes(HStarEvaluator(spec, n));
}

}  // namespace hz
