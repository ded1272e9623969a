#pragma once

#include "heckezeros/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <complex>

namespace hz {

// Working type for arc evaluations that must survive the cancellation in
// monomial-basis evaluation of high-degree polynomials in j.
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<160>,
                                                boost::multiprecision::et_off>;
using HighComplex = std::complex<HighFloat>;

template <class T>
T to_real(const Rational& r);

template <>
inline double to_real<double>(const Rational& r) {
  return r.get_d();
}

template <>
inline HighFloat to_real<HighFloat>(const Rational& r) {
  HighFloat out;
  mpfr_set_q(out.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return out;
}

template <class T>
T pi_value() {
  if constexpr (std::is_same_v<T, double>) {
    return 3.141592653589793238462643383279502884;
  } else {
    return boost::math::constants::pi<T>();
  }
}

// q = exp(2 pi i tau) for tau = e^{i theta}.
template <class T>
std::complex<T> nome_on_arc(const T& theta) {
  using std::cos;
  using std::exp;
  using std::sin;
  const T two_pi = 2 * pi_value<T>();
  T modulus = exp(-two_pi * sin(theta));
  T arg = two_pi * cos(theta);
  return {modulus * cos(arg), modulus * sin(arg)};
}

}  // namespace hz
