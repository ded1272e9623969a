#include "heckezeros/rpoly.hpp"

#include "heckezeros/error.hpp"

#include <sstream>

namespace hz {

RPoly::RPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RPoly RPoly::constant(const Rational& c) { return RPoly({c}); }

RPoly RPoly::x_minus(const Rational& root) { return RPoly({-root, Rational(1)}); }

RPoly RPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RPoly(std::move(v));
}

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RPoly RPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RPoly(std::move(d));
}

RPoly RPoly::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * *this;
}

RPoly RPoly::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm(1), num_gcd(0);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / num_gcd));
  return RPoly(std::move(out));
}

RPoly RPoly::operator-() const { return Rational(-1) * *this; }

RPoly operator+(const RPoly& a, const RPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RPoly(std::move(c));
}

RPoly operator-(const RPoly& a, const RPoly& b) { return a + (-b); }

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RPoly(std::move(c));
}

RPoly operator*(const Rational& c, const RPoly& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return RPoly(std::move(out));
}

std::string RPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (d == 0 || !unit) os << hz::to_string(mag);
    if (d > 0) {
      if (!unit) os << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroLeadingCoefficient, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational inv_lead = 1 / b.leading();
  for (int d = da; d >= db; --d) {
    Rational f = rem[static_cast<std::size_t>(d)] * inv_lead;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(d - db)] = f;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {RPoly(std::move(quo)), RPoly(std::move(rem))};
}

RPoly gcd(const RPoly& a, const RPoly& b) {
  RPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    RPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace hz
