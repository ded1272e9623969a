#include "heckezeros/rational.hpp"

#include "heckezeros/error.hpp"

#include <cctype>

namespace hz {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::ParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::ParseError, "not a rational literal: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, long exp) {
  if (exp >= 0) {
    return make_rational(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                         ipow(base.get_den(), static_cast<unsigned long>(exp)));
  }
  if (base == 0) throw Error(Errc::ZeroLeadingCoefficient, "0 raised to a negative power");
  auto e = static_cast<unsigned long>(-exp);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace hz
