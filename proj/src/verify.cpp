#include "heckezeros/verify.hpp"

#include "heckezeros/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>

namespace hz {

bool VerifyReport::passed() const {
  if (!contracted) return true;
  return gap_ok() && bounds_hold && sign_changes_ok() && roots_ok() && one_per_subinterval &&
         sign_changes.expected + static_cast<std::int64_t>(endpoint_zeros.size()) == degree;
}

VerifyReport run_verify(const WeakEigenformSpec& spec, std::int64_t n, int grid) {
  validate(spec);
  VerifyReport rep;
  rep.n = n;
  rep.c_f = c_constant(spec);
  rep.n_min = min_valid_n(spec);
  rep.contracted = n >= rep.n_min;

  const HeckePolyResult hp = hecke_polynomial(spec, n);
  rep.degree = hp.degree;
  const HStarEvaluator eval(spec, n, hp.poly);
  const std::int64_t mn = spec.m * n;
  for (double theta : theta_grid(grid)) {
    const ArcSample s = eval.eval(theta);
    BoundRow row;
    row.theta = theta;
    row.j = s.j_val.real();
    row.re_hstar = s.hstar.real();
    row.f = s.f_val;
    row.gap = s.gap;
    row.qbound = q_bound(mn, spec.k, theta);
    row.pbound = p_bound(mn, spec.k, theta);
    row.rbound = r_bound(spec, n, theta);
    row.rhs = std::exp(-2 * std::numbers::pi * static_cast<double>(mn) * std::sin(theta)) * (row.qbound + row.rbound);
    rep.max_gap = std::max(rep.max_gap, row.gap);
    if (!(row.gap <= row.rhs)) rep.bounds_hold = false;
    rep.rows.push_back(row);
  }

  if (2 * std::numbers::pi * std::sqrt(3.0) / 2 * static_cast<double>(mn) > (spec.k - 2) / 2.0) {
    rep.sign_changes = verify_sign_changes(eval);
  }
  rep.endpoint_zeros = predicted_endpoint_zeros(spec.k);
  rep.roots = analyze_roots(hp.poly);
  if (!rep.roots.thetas.empty()) {
    rep.discrepancy_theta = discrepancy(rep.roots.thetas);
    rep.discrepancy_x = discrepancy_x(rep.roots.refined);
  }
  rep.one_per_subinterval = one_per_subinterval(mn, spec.k, rep.roots.thetas);
  return rep;
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HECKE_ZEROS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

std::vector<VerifyReport> run_verify_range(const WeakEigenformSpec& spec, std::int64_t first, std::int64_t last,
                                           int grid) {
  if (last < first) throw Error(Errc::OutOfRange, "empty n-range");
  const auto count = static_cast<std::size_t>(last - first + 1);
  std::vector<std::optional<VerifyReport>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = run_verify(spec, first + static_cast<std::int64_t>(i), grid);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // Report the failure for the smallest n, independent of scheduling.
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  std::vector<VerifyReport> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace hz
