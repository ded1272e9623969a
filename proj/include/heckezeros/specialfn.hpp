#pragma once

#include <cstdint>

namespace hz {

// A floating point value together with a nonnegative bound on its absolute
// error (truncation plus accumulated rounding).
struct Real {
  double value = 0.0;
  double abs_err = 0.0;
};

// Sum over v in (Z/cZ)^x of cos(2 pi (m v' + n v)/c), v' = v^-1 mod c.
// K(m,n,1) = 1.
Real kloosterman(std::int64_t m, std::int64_t n, std::int64_t c);

// Modified and ordinary Bessel functions of integer order, x >= 0.
Real bessel_i(int nu, double x);
Real bessel_j(int nu, double x);

// sum_{n=0}^{j} x^n / n!
double trunc_exp(int j, double x);

// 1 - e^{-x} e_j(x), evaluated without cancellation for small x.
double exp_tail_fraction(int j, double x);

// M_{kappa,kappa+1/2}(x) = (2kappa+1)! (e^{x/2} - e^{-x/2} e_{2kappa}(x)) / x^kappa.
Real whittaker_m_closed(int kappa, double x);

constexpr std::int64_t kDefaultCmax = 10000;

// Fourier coefficients of the Maass-Poincare series F_{2-k,-l}.
// Holomorphic part, n >= 1.
Real poincare_cplus(int k, std::int64_t l, std::int64_t n, std::int64_t cmax = kDefaultCmax);
// Nonholomorphic part, coefficient of Gamma(1-k,4 pi n v) q^-n.
Real poincare_cminus(int k, std::int64_t l, std::int64_t n, std::int64_t cmax = kDefaultCmax);
// Constant term of the holomorphic part.
Real poincare_const(int k, std::int64_t l, std::int64_t cmax = kDefaultCmax);

// Coefficient of q^n in the mock modular form attached to Delta.
Real mock_delta_coeff(std::int64_t n, std::int64_t cmax = kDefaultCmax);

}  // namespace hz
