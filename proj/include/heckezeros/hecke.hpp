#pragma once

#include "heckezeros/qseries.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace hz {

// Source of the shadow eigenvalues a(n). Either the normalized cusp form of
// a weight with dim S_k = 1, or an explicit table supplied by the user.
class EigenvalueSource {
 public:
  enum class Kind { BuiltinDim1, List };

  static EigenvalueSource builtin(int k);
  static EigenvalueSource from_list(std::map<std::int64_t, Rational> values);

  Kind kind() const { return kind_; }
  int weight() const { return weight_; }  // BuiltinDim1 only
  const std::map<std::int64_t, Rational>& values() const { return values_; }

  // Throws MissingEigenvalue.
  Rational operator()(std::int64_t n) const;

 private:
  Kind kind_ = Kind::List;
  int weight_ = 0;
  std::map<std::int64_t, Rational> values_;
};

Rational eigenvalue(const EigenvalueSource& src, std::int64_t n);

// f | T_w(n): coefficient at q^m is sum_{d | (n,m)} d^(w-1) c_f(nm/d^2).
// The result is known through floor(precision(f)/n). When `want` is given
// and exceeds that, throws InsufficientPrecision.
QSeries hecke_apply(const QSeries& f, int w, std::int64_t n, std::optional<std::int64_t> want = std::nullopt);

// Exact coefficients of n^(k-1) F | T_{2-k}(n) at exponents -mn..0, from the
// coefficients c(l), -m <= l <= 0, of F (principal[i] = c(-m+i), i.e. the
// vector runs c(-m), ..., c(0)). Throws BadNormalization unless c(-m) == 1.
// Returned vector is indexed the same way: out[i] is the coefficient of q^(-mn+i).
std::vector<Rational> scaled_hecke_principal(const std::vector<Rational>& lower, int k, int m, std::int64_t n);

}  // namespace hz
