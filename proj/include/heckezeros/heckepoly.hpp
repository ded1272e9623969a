#pragma once

#include "heckezeros/hecke.hpp"
#include "heckezeros/qseries.hpp"
#include "heckezeros/rpoly.hpp"

#include <cstdint>
#include <vector>

namespace hz {

// What P_n(F;x) needs to know about a weight 2-k weak Hecke eigenform F:
// the principal part and constant term of F+, and the shadow eigenvalues.
struct WeakEigenformSpec {
  int k = 12;                      // shadow weight
  int m = 1;                       // pole order at the cusp
  std::vector<Rational> principal; // c(-m), ..., c(-1); c(-m) == 1
  Rational constant;               // c(0)
  EigenvalueSource eigenvalues;

  // c(-m..0) as one vector.
  std::vector<Rational> lower() const;
  // Sum of |c(-l)| for 1 <= l <= m.
  Rational principal_l1() const;
};

// Throws InvalidSpec / BadNormalization.
void validate(const WeakEigenformSpec& spec);

// The weight -10 form R: k = 12, m = 1, constant 24/B_12.
WeakEigenformSpec builtin_R_spec();
// The Maass-Poincare series F_{2-k,-1} for a weight with dim S_k = 1
// (constant term 2k/B_k). builtin_poincare_spec(12) equals builtin_R_spec().
WeakEigenformSpec builtin_poincare_spec(int k);

// Degree of P_n: mn - b(k-2).
int hecke_degree(const WeakEigenformSpec& spec, std::int64_t n);

// Coefficients of H_n(F;tau) at exponents <= 0 (precision 0).
QSeries hn_lower_part(const WeakEigenformSpec& spec, std::int64_t n);

struct HeckePolyResult {
  RPoly poly;
  int degree = 0;
  bool zero_at_0 = false;
  bool zero_at_1728 = false;
};

// P_n(F;x) = sum_d h_d J_d(x) + h_0. Throws DegreeMismatch if the result is
// not monic of degree mn - b(k-2).
HeckePolyResult hecke_polynomial(const WeakEigenformSpec& spec, std::int64_t n);
// Same, reusing precomputed Faber polynomials J_0..J_D (D >= degree).
HeckePolyResult hecke_polynomial(const WeakEigenformSpec& spec, std::int64_t n, const std::vector<RPoly>& faber_table);

enum class ArcEndpoint { Rho, I };  // theta = pi/3 (x = 0), theta = pi/2 (x = 1728)

// Endpoints of the arc where E~_{k-2} vanishes.
std::vector<ArcEndpoint> predicted_endpoint_zeros(int k);

struct EndpointReport {
  std::vector<ArcEndpoint> predicted_Z;
  bool actual_zero_at_0 = false;
  bool actual_zero_at_1728 = false;
  // Endpoint zeros predicted by congruences on k alone; reported next to
  // the E~ table, not asserted against it.
  bool congruence_predicts_0 = false;     // k = 2,4 (mod 6)
  bool congruence_predicts_1728 = false;  // k = 2 (mod 4)
};

EndpointReport endpoint_report(const WeakEigenformSpec& spec, std::int64_t n);

}  // namespace hz
