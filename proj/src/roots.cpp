#include "heckezeros/roots.hpp"

#include "heckezeros/arcbounds.hpp"
#include "heckezeros/error.hpp"
#include "heckezeros/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace hz {

namespace {

std::vector<Integer> to_integers(const RPoly& p) {
  const RPoly prim = p.primitive();
  std::vector<Integer> out;
  out.reserve(prim.coeffs().size());
  for (const auto& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

// Sign of p(num/den), den > 0, via the homogenized integer Horner scheme.
int sign_of(const std::vector<Integer>& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer den_pow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + p[i] * den_pow;
  }
  return sgn(acc);
}

RPoly squarefree_part(const RPoly& p) {
  const RPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

}  // namespace

SturmSequence::SturmSequence(const RPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroLeadingCoefficient, "Sturm sequence of the zero polynomial");
  RPoly a = p.primitive();
  RPoly b = p.derivative().primitive();
  chain_.push_back(to_integers(a));
  while (!b.is_zero()) {
    chain_.push_back(to_integers(b));
    RPoly r = (-divmod(a, b).second).primitive();
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& poly : chain_) {
    const int s = sign_of(poly, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

int sign_at(const RPoly& p, const Rational& x) { return sgn(p.eval(x)); }

std::vector<IsolatingInterval> sturm_isolate(const RPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(Errc::ZeroLeadingCoefficient, "cannot isolate roots of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0 || lo > hi) return out;
  const RPoly q = squarefree_part(p);
  const SturmSequence seq(q);
  const auto qi = to_integers(q);
  auto is_root = [&](const Rational& x) { return sign_of(qi, x.get_num(), x.get_den()) == 0; };

  if (is_root(lo)) out.push_back({lo, lo});
  // Roots in (a, b], count = V(a) - V(b); a reported interval needs both
  // endpoints off the roots unless it is degenerate.
  std::function<void(const Rational&, const Rational&, int, int)> split =
      [&](const Rational& a, const Rational& b, int va, int vb) {
        const int count = va - vb;
        if (count <= 0) return;
        if (count == 1) {
          if (is_root(b)) {
            out.push_back({b, b});
            return;
          }
          if (!is_root(a)) {
            out.push_back({a, b});
            return;
          }
        }
        const Rational mid = (a + b) / 2;
        const int vm = seq.variations(mid);
        split(a, mid, va, vm);
        split(mid, b, vm, vb);
      };
  split(lo, hi, seq.variations(lo), seq.variations(hi));
  return out;
}

int count_distinct_roots(const RPoly& p, const Rational& lo, const Rational& hi) {
  const SturmSequence seq(p);
  return seq.count(lo, hi) + (sign_at(p, lo) == 0 ? 1 : 0);
}

bool all_roots_simple(const RPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroLeadingCoefficient, "zero polynomial");
  return gcd(p, p.derivative()).degree() <= 0;
}

double refine_root(const RPoly& p, const IsolatingInterval& iv, double tol) {
  if (iv.exact()) return to_double(iv.lo);
  const auto pi = to_integers(p);
  Rational a = iv.lo, b = iv.hi;
  int sa = sign_of(pi, a.get_num(), a.get_den());
  while (to_double(b - a) > tol) {
    const Rational mid = (a + b) / 2;
    const int sm = sign_of(pi, mid.get_num(), mid.get_den());
    if (sm == 0) return to_double(mid);
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return to_double((a + b) / 2);
}

double j_on_arc(double theta) {
  static const QSeries j = jinv(60);
  return series_eval_numeric(j, nome_on_arc(theta)).value.real();
}

double theta_pullback(double x) {
  if (!(x >= 0 && x <= 1728)) throw Error(Errc::OutOfRange, "theta_pullback needs 0 <= x <= 1728");
  double lo = std::numbers::pi / 3, hi = std::numbers::pi / 2;
  if (x == 0) return lo;
  if (x == 1728) return hi;
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (j_on_arc(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

double star_discrepancy(std::vector<double> u) {
  if (u.empty()) throw Error(Errc::EmptyInput, "discrepancy of an empty set");
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d = std::max(d, (i + 1) / n - u[i]);
    d = std::max(d, u[i] - i / n);
  }
  return d;
}

}  // namespace

double discrepancy(std::vector<double> thetas) {
  for (auto& t : thetas) t = (t - std::numbers::pi / 3) / (std::numbers::pi / 6);
  return star_discrepancy(std::move(thetas));
}

double discrepancy_x(std::vector<double> xs) {
  for (auto& x : xs) x /= 1728.0;
  return star_discrepancy(std::move(xs));
}

RootReport analyze_roots(const RPoly& p) {
  RootReport r;
  r.degree = p.degree();
  r.intervals = sturm_isolate(p, Rational(0), Rational(1728));
  r.count_in_interval = static_cast<int>(r.intervals.size());
  r.all_simple = all_roots_simple(p);
  for (const auto& iv : r.intervals) {
    const double x = std::clamp(refine_root(p, iv), 0.0, 1728.0);
    r.refined.push_back(x);
    r.thetas.push_back(theta_pullback(x));
  }
  return r;
}

bool one_per_subinterval(std::int64_t mn, int k, const std::vector<double>& thetas) {
  const auto [first, last] = sign_interval_indices(mn, k);
  for (std::int64_t i = first; i <= last; ++i) {
    const double lo = g_inverse(mn, k, std::numbers::pi * static_cast<double>(i + 1));
    const double hi = g_inverse(mn, k, std::numbers::pi * static_cast<double>(i));
    const auto inside = std::count_if(thetas.begin(), thetas.end(), [&](double t) { return t > lo && t < hi; });
    if (inside != 1) return false;
  }
  return true;
}

bool one_per_subinterval(const WeakEigenformSpec& spec, std::int64_t n) {
  const HeckePolyResult hp = hecke_polynomial(spec, n);
  return one_per_subinterval(spec.m * n, spec.k, analyze_roots(hp.poly).thetas);
}

}  // namespace hz
