#pragma once

#include "heckezeros/arcbounds.hpp"
#include "heckezeros/heckepoly.hpp"
#include "heckezeros/roots.hpp"

#include <cstdint>
#include <vector>

namespace hz {

struct BoundRow {
  double theta = 0;
  double j = 0;
  double re_hstar = 0;
  double f = 0;
  double gap = 0;     // |e^{(2-k)i theta/2} e^{-2 pi mn sin theta} H* - f|
  double qbound = 0;
  double pbound = 0;
  double rbound = 0;
  double rhs = 0;     // e^{-2 pi mn sin theta} (qbound + rbound)
};

struct VerifyReport {
  std::int64_t n = 0;
  int degree = 0;
  Rational c_f;
  std::int64_t n_min = 0;
  bool contracted = false;  // n >= n_min, so the checks below are theorem contracts
  std::vector<BoundRow> rows;
  double max_gap = 0;
  bool bounds_hold = true;  // gap <= rhs on every row
  SignChangeReport sign_changes;
  std::vector<ArcEndpoint> endpoint_zeros;
  RootReport roots;
  double discrepancy_theta = 0;
  double discrepancy_x = 0;
  bool one_per_subinterval = false;

  bool gap_ok() const { return max_gap < 2; }
  bool sign_changes_ok() const { return sign_changes.found == sign_changes.expected; }
  bool roots_ok() const { return roots.count_in_interval == degree && roots.all_simple; }
  bool passed() const;  // all contracted checks (vacuously true below n_min)
};

VerifyReport run_verify(const WeakEigenformSpec& spec, std::int64_t n, int grid = 200);

// One report per n in [first, last], ordered by n. Runs up to
// HECKE_ZEROS_THREADS (default: hardware concurrency) workers.
std::vector<VerifyReport> run_verify_range(const WeakEigenformSpec& spec, std::int64_t first, std::int64_t last,
                                           int grid = 200);

unsigned worker_count();

}  // namespace hz
