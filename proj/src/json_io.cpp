#include "heckezeros/json_io.hpp"

#include "heckezeros/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hz {

namespace {

const char* endpoint_name(ArcEndpoint e) { return e == ArcEndpoint::Rho ? "rho" : "i"; }

// Shortest round-trip representation, stable across runs.
std::string fmt(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

[[noreturn]] void bad_spec(const std::string& what) { throw Error(Errc::InvalidSpec, "spec: " + what); }

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"valuation", s.valuation()}, {"precision", s.precision()}, {"coeffs", coeffs}};
}

Json to_json(const RPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const HeckePolyResult& r) {
  return Json{{"degree", r.degree},
              {"coeffs", to_json(r.poly)},
              {"zero_at_0", r.zero_at_0},
              {"zero_at_1728", r.zero_at_1728}};
}

Json to_json(const Real& r, std::int64_t cmax) {
  return Json{{"value", r.value}, {"abs_err", r.abs_err}, {"cmax", cmax}};
}

Json to_json(const WeakEigenformSpec& spec) {
  Json principal = Json::array();
  for (const auto& c : spec.principal) principal.push_back(to_string(c));
  Json eig;
  if (spec.eigenvalues.kind() == EigenvalueSource::Kind::BuiltinDim1) {
    eig = Json{{"kind", "builtin-dim1"}, {"k", spec.eigenvalues.weight()}};
  } else {
    Json values = Json::object();
    for (const auto& [n, a] : spec.eigenvalues.values()) values[std::to_string(n)] = to_string(a);
    eig = Json{{"kind", "list"}, {"values", values}};
  }
  return Json{{"k", spec.k},
              {"m", spec.m},
              {"principal", principal},
              {"constant", to_string(spec.constant)},
              {"eigenvalues", eig}};
}

Json to_json(const VerifyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"theta", row.theta},
                        {"j", row.j},
                        {"re_hstar", row.re_hstar},
                        {"f", row.f},
                        {"lhs_gap", row.gap},
                        {"qbound", row.qbound},
                        {"pbound", row.pbound},
                        {"rbound", row.rbound},
                        {"rhs", row.rhs}});
  }
  Json endpoints = Json::array();
  for (ArcEndpoint e : r.endpoint_zeros) endpoints.push_back(endpoint_name(e));
  Json intervals = Json::array();
  for (std::size_t i = 0; i < r.roots.intervals.size(); ++i) {
    intervals.push_back(Json{{"x_lo", to_string(r.roots.intervals[i].lo)},
                             {"x_hi", to_string(r.roots.intervals[i].hi)},
                             {"x_refined", r.roots.refined[i]},
                             {"theta", r.roots.thetas[i]}});
  }
  return Json{{"n", r.n},
              {"degree", r.degree},
              {"C_F", to_string(r.c_f)},
              {"n_min", r.n_min},
              {"contracted", r.contracted},
              {"passed", r.passed()},
              {"max_gap", r.max_gap},
              {"gap_ok", r.gap_ok()},
              {"bounds_hold", r.bounds_hold},
              {"sign_changes", Json{{"expected", r.sign_changes.expected}, {"found", r.sign_changes.found}}},
              {"endpoint_zeros", endpoints},
              {"roots", Json{{"count_in_interval", r.roots.count_in_interval},
                             {"all_simple", r.roots.all_simple},
                             {"intervals", intervals}}},
              {"discrepancy_theta", r.discrepancy_theta},
              {"discrepancy_x", r.discrepancy_x},
              {"one_per_subinterval", r.one_per_subinterval},
              {"per_theta", rows}};
}

Json roots_summary(const VerifyReport& r) {
  return Json{{"n", r.n},
              {"degree", r.degree},
              {"count_in_interval", r.roots.count_in_interval},
              {"all_simple", r.roots.all_simple},
              {"discrepancy_theta", r.discrepancy_theta}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  throw Error(Errc::ParseError, "expected a rational string, got " + j.dump());
}

QSeries qseries_from_json(const Json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return QSeries::from_coeffs(j.at("valuation").get<std::int64_t>(), std::move(coeffs),
                                j.at("precision").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("q-series: ") + e.what());
  }
}

RPoly rpoly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a list of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return RPoly(std::move(coeffs));
}

WeakEigenformSpec spec_from_json(const Json& j) {
  if (!j.is_object()) bad_spec("top level must be an object");
  WeakEigenformSpec spec;
  try {
    if (!j.at("k").is_number_integer()) bad_spec("k must be an integer");
    spec.k = j.at("k").get<int>();
    if (!j.at("m").is_number_integer()) bad_spec("m must be an integer");
    spec.m = j.at("m").get<int>();
    if (!j.at("principal").is_array()) bad_spec("principal must be a list");
    for (const auto& c : j.at("principal")) spec.principal.push_back(rational_from_json(c));
    spec.constant = rational_from_json(j.at("constant"));
    const Json& eig = j.at("eigenvalues");
    const std::string kind = eig.at("kind").get<std::string>();
    if (kind == "builtin-dim1") {
      spec.eigenvalues = EigenvalueSource::builtin(eig.at("k").get<int>());
    } else if (kind == "list") {
      std::map<std::int64_t, Rational> values;
      for (const auto& [key, val] : eig.at("values").items()) {
        std::size_t used = 0;
        long long idx = 0;
        try {
          idx = std::stoll(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || idx < 1) bad_spec("eigenvalue index '" + key + "' is not a positive integer");
        values[idx] = rational_from_json(val);
      }
      spec.eigenvalues = EigenvalueSource::from_list(std::move(values));
    } else {
      bad_spec("unknown eigenvalue kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    bad_spec(e.what());
  }
  validate(spec);
  return spec;
}

WeakEigenformSpec load_spec(const std::string& form) {
  if (form == "R") return builtin_R_spec();
  std::ifstream in(form);
  if (!in) throw Error(Errc::InvalidSpec, "cannot open spec file " + form);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, form + ": " + e.what());
  }
  return spec_from_json(j);
}

std::string bound_rows_csv(const VerifyReport& r, bool header) {
  std::ostringstream out;
  if (header) out << "n,theta,j,re_hstar,f,gap,qbound,pbound,rbound,rhs\n";
  for (const auto& row : r.rows) {
    out << r.n << ',' << fmt(row.theta) << ',' << fmt(row.j) << ',' << fmt(row.re_hstar) << ',' << fmt(row.f) << ','
        << fmt(row.gap) << ',' << fmt(row.qbound) << ',' << fmt(row.pbound) << ',' << fmt(row.rbound) << ','
        << fmt(row.rhs) << '\n';
  }
  return out.str();
}

std::string roots_csv(const VerifyReport& r, bool header) {
  std::ostringstream out;
  if (header) out << "n,root_index,x_lo,x_hi,x_refined,theta\n";
  for (std::size_t i = 0; i < r.roots.intervals.size(); ++i) {
    out << r.n << ',' << i << ',' << to_string(r.roots.intervals[i].lo) << ',' << to_string(r.roots.intervals[i].hi)
        << ',' << fmt(r.roots.refined[i]) << ',' << fmt(r.roots.thetas[i]) << '\n';
  }
  return out.str();
}

}  // namespace hz
