#pragma once

#include "heckezeros/heckepoly.hpp"
#include "heckezeros/qseries.hpp"
#include "heckezeros/rpoly.hpp"
#include "heckezeros/specialfn.hpp"
#include "heckezeros/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace hz {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QSeries& s);
Json to_json(const RPoly& p);  // ascending list of "p/q" strings
Json to_json(const HeckePolyResult& r);
Json to_json(const Real& r, std::int64_t cmax);
Json to_json(const VerifyReport& r);
Json to_json(const WeakEigenformSpec& spec);
// {n, degree, count_in_interval, all_simple, discrepancy_theta}
Json roots_summary(const VerifyReport& r);

Rational rational_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);
RPoly rpoly_from_json(const Json& j);
// Throws InvalidSpec (wrong shape) or ParseError (bad numbers); validates.
WeakEigenformSpec spec_from_json(const Json& j);
// "R" gives the builtin spec, anything else is read as a JSON file.
WeakEigenformSpec load_spec(const std::string& form);

// Per-theta rows: theta, j, re_hstar, f, gap, qbound, pbound, rbound, rhs.
std::string bound_rows_csv(const VerifyReport& r, bool header = true);
// n, root_index, x_lo, x_hi, x_refined, theta.
std::string roots_csv(const VerifyReport& r, bool header = true);

}  // namespace hz
