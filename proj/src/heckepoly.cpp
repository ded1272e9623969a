#include "heckezeros/heckepoly.hpp"

#include "heckezeros/error.hpp"
#include "heckezeros/modforms.hpp"

#include <string>

namespace hz {

std::vector<Rational> WeakEigenformSpec::lower() const {
  std::vector<Rational> out(principal);
  out.push_back(constant);
  return out;
}

Rational WeakEigenformSpec::principal_l1() const {
  Rational total(0);
  for (const auto& c : principal) total += abs(c);
  return total;
}

void validate(const WeakEigenformSpec& spec) {
  if (spec.k % 2 != 0 || spec.k < 12)
    throw Error(Errc::InvalidSpec, "k must be even and >= 12, got " + std::to_string(spec.k));
  if (spec.m < 1) throw Error(Errc::InvalidSpec, "m must be >= 1");
  if (static_cast<int>(spec.principal.size()) != spec.m)
    throw Error(Errc::InvalidSpec, "principal must list c(-m..-1): expected " + std::to_string(spec.m) +
                                       " entries, got " + std::to_string(spec.principal.size()));
  if (spec.principal.front() != 1) throw Error(Errc::BadNormalization, "c(-m) must be 1");
  if (spec.eigenvalues.kind() == EigenvalueSource::Kind::BuiltinDim1 && spec.eigenvalues.weight() != spec.k)
    throw Error(Errc::InvalidSpec, "builtin eigenvalues have weight " + std::to_string(spec.eigenvalues.weight()) +
                                       " but k = " + std::to_string(spec.k));
}

WeakEigenformSpec builtin_poincare_spec(int k) {
  WeakEigenformSpec s;
  s.k = k;
  s.m = 1;
  s.principal = {Rational(1)};
  s.constant = Rational(2 * k) / bernoulli(k);
  s.eigenvalues = EigenvalueSource::builtin(k);
  return s;
}

WeakEigenformSpec builtin_R_spec() { return builtin_poincare_spec(12); }

int hecke_degree(const WeakEigenformSpec& spec, std::int64_t n) {
  return static_cast<int>(spec.m * n) - b_exp(spec.k - 2);
}

QSeries hn_lower_part(const WeakEigenformSpec& spec, std::int64_t n) {
  validate(spec);
  if (n < 2) throw Error(Errc::OutOfRange, "n must be >= 2");
  const std::int64_t top = spec.m * n;
  // Inner combination n^(k-1) F|T_{2-k}(n) - a(n) F at exponents -mn..0.
  std::vector<Rational> inner = scaled_hecke_principal(spec.lower(), spec.k, spec.m, n);
  const Rational an = spec.eigenvalues(n);
  const auto lower = spec.lower();
  for (int i = 0; i <= spec.m; ++i) {
    const std::int64_t e = -spec.m + i;
    inner[static_cast<std::size_t>(e + top)] -= an * lower[static_cast<std::size_t>(i)];
  }
  const QSeries inner_series = QSeries::from_coeffs(-top, std::move(inner), 0);
  // Delta^b E~ has valuation b >= 0, so only exponents <= 0 of the inner
  // combination reach the exponents <= 0 of the product.
  const int b = b_exp(spec.k - 2);
  const std::int64_t N = top + b + 1;
  const QSeries multiplier = series_pow(delta(N), static_cast<unsigned>(b)) * tilde_e(spec.k - 2, N);
  QSeries product = inner_series * multiplier;
  return product.truncated(0);
}

HeckePolyResult hecke_polynomial(const WeakEigenformSpec& spec, std::int64_t n) {
  return hecke_polynomial(spec, n, faber_polys(hecke_degree(spec, n)));
}

HeckePolyResult hecke_polynomial(const WeakEigenformSpec& spec, std::int64_t n, const std::vector<RPoly>& faber_table) {
  const QSeries h = hn_lower_part(spec, n);
  const int expected = hecke_degree(spec, n);
  const std::int64_t top = h.is_zero() ? 0 : -h.valuation();
  if (top > static_cast<std::int64_t>(faber_table.size()) - 1)
    throw Error(Errc::DegreeMismatch, "principal part of H_n reaches q^-" + std::to_string(top) +
                                          " beyond the Faber table");
  RPoly p = RPoly::constant(h.coeff(0));
  for (std::int64_t d = 1; d <= top; ++d) {
    const Rational c = h.coeff(-d);
    if (c != 0) p = p + c * faber_table[static_cast<std::size_t>(d)];
  }
  if (p.degree() != expected || !p.is_monic())
    throw Error(Errc::DegreeMismatch, "P_" + std::to_string(n) + " has degree " + std::to_string(p.degree()) +
                                          ", leading " + to_string(p.is_zero() ? Rational(0) : p.leading()) +
                                          "; expected monic of degree " + std::to_string(expected));
  HeckePolyResult r;
  r.degree = expected;
  r.zero_at_0 = p.eval(Rational(0)) == 0;
  r.zero_at_1728 = p.eval(Rational(1728)) == 0;
  r.poly = std::move(p);
  return r;
}

std::vector<ArcEndpoint> predicted_endpoint_zeros(int k) {
  switch (((k % 12) + 12) % 12) {
    case 0:
    case 4: return {ArcEndpoint::Rho, ArcEndpoint::I};
    case 8: return {ArcEndpoint::I};
    case 6:
    case 10: return {ArcEndpoint::Rho};
    default: return {};
  }
}

EndpointReport endpoint_report(const WeakEigenformSpec& spec, std::int64_t n) {
  const HeckePolyResult r = hecke_polynomial(spec, n);
  EndpointReport rep;
  rep.predicted_Z = predicted_endpoint_zeros(spec.k);
  rep.actual_zero_at_0 = r.zero_at_0;
  rep.actual_zero_at_1728 = r.zero_at_1728;
  const int k6 = ((spec.k % 6) + 6) % 6;
  rep.congruence_predicts_0 = (k6 == 2 || k6 == 4);
  rep.congruence_predicts_1728 = (((spec.k % 4) + 4) % 4) == 2;
  return rep;
}

}  // namespace hz
