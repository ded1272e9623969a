#pragma once

#include "heckezeros/qseries.hpp"
#include "heckezeros/rpoly.hpp"

#include <cstdint>

namespace hz {

// sigma_nu(n) = sum of d^nu over positive divisors d of n.
Integer divisor_sigma(unsigned nu, std::uint64_t n);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, through q^N. k even, k >= 4.
QSeries eisenstein(int k, std::int64_t N);

// Delta = (E_4^3 - E_6^2)/1728 and j = E_4^3/Delta, both through q^N.
QSeries delta(std::int64_t N);
QSeries jinv(std::int64_t N);

// The product of E_4, E_6 powers carrying the forced zeros of weight k forms;
// 1 when k = 0 (mod 12).
QSeries tilde_e(int k, std::int64_t N);

// floor(k/12), minus one when k = 2 (mod 12).
int b_exp(int k);

// Elliptic-point factor of the divisor polynomial.
RPoly h_poly(int k);

// Expresses s as a polynomial in j: returns P and s - P(j). The principal
// part and constant term of the remainder vanish. s must be known through q^0.
struct JReduction {
  RPoly poly;
  QSeries remainder;
};
JReduction reduce_in_j(const QSeries& s);

struct Faber {
  QSeries series;  // j_n = q^-n + O(q), zero constant term, through q^N
  RPoly poly;      // J_n, monic of degree n, J_n(j) = j_n
};
Faber faber(int n, std::int64_t N);

// J_0..J_nmax computed together (shares the powers of j).
std::vector<RPoly> faber_polys(int nmax);

// Normalized cusp form Delta * E_{k-12} for the weights where dim S_k = 1.
QSeries cusp_eigenform(int k, std::int64_t N);
bool is_dim_one_cusp_weight(int k);

// P(f;x) = h_k(x) * Ptilde(f;x). Throws InexactDivision when f / (Delta^b E~_k)
// is not a polynomial in j through the available precision.
RPoly divisor_polynomial(const QSeries& f, int k);

}  // namespace hz
