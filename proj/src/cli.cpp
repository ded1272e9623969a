#include "heckezeros/cli.hpp"

#include "heckezeros/error.hpp"
#include "heckezeros/json_io.hpp"
#include "heckezeros/modforms.hpp"
#include "heckezeros/specialfn.hpp"
#include "heckezeros/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

namespace hz::cli {

namespace {

struct RunConfig {
  std::string form = "R";
  std::optional<std::int64_t> n;
  std::string n_range;
  std::int64_t precision = 40;
  std::int64_t cmax = kDefaultCmax;
  int grid = 200;
  std::string out_path;
  std::string roots_csv_path;
  std::string format = "json";
  bool csv = false;
  int k = 12;
  std::int64_t l = 1;
  bool minus = false;
  std::string series;
};

std::pair<std::int64_t, std::int64_t> n_bounds(const RunConfig& cfg, std::int64_t min_n) {
  std::int64_t lo = 0, hi = 0;
  if (!cfg.n_range.empty()) {
    static const std::regex re(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(cfg.n_range, m, re)) throw Error(Errc::OutOfRange, "--n-range must look like A..B");
    lo = std::stoll(m[1]);
    hi = std::stoll(m[2]);
    if (hi < lo) throw Error(Errc::OutOfRange, "--n-range is empty");
  } else if (cfg.n) {
    lo = hi = *cfg.n;
  } else {
    throw Error(Errc::OutOfRange, "one of --n or --n-range is required");
  }
  if (lo < min_n) throw Error(Errc::OutOfRange, "n must be >= " + std::to_string(min_n));
  return {lo, hi};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw Error(Errc::OutOfRange, "cannot write " + cfg.out_path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool want_csv(const RunConfig& cfg) { return cfg.csv || cfg.format == "csv"; }

int cmd_hecke_poly(const RunConfig& cfg, std::ostream& out) {
  const WeakEigenformSpec spec = load_spec(cfg.form);
  const auto [lo, hi] = n_bounds(cfg, 1);
  std::vector<std::pair<std::int64_t, HeckePolyResult>> results;
  for (std::int64_t n = lo; n <= hi; ++n) results.emplace_back(n, hecke_polynomial(spec, n));
  std::string text;
  if (want_csv(cfg)) {
    std::ostringstream s;
    s << "n,degree,power,coeff\n";
    for (const auto& [n, r] : results)
      for (std::size_t i = 0; i < r.poly.coeffs().size(); ++i)
        s << n << ',' << r.degree << ',' << i << ',' << to_string(r.poly.coeffs()[i]) << '\n';
    text = s.str();
  } else if (results.size() == 1) {
    text = dump(to_json(results.front().second));
  } else {
    Json arr = Json::array();
    for (const auto& [n, r] : results) {
      Json j{{"n", n}};
      j.update(to_json(r));
      arr.push_back(j);
    }
    text = dump(arr);
  }
  emit(cfg, text, out);
  return Ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const WeakEigenformSpec spec = load_spec(cfg.form);
  const auto [lo, hi] = n_bounds(cfg, 2);
  if (cfg.grid < 1) throw Error(Errc::OutOfRange, "--grid must be positive");
  const std::vector<VerifyReport> reports = run_verify_range(spec, lo, hi, cfg.grid);
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  std::string text;
  if (want_csv(cfg)) {
    for (std::size_t i = 0; i < reports.size(); ++i) text += bound_rows_csv(reports[i], i == 0);
  } else if (reports.size() == 1) {
    text = dump(to_json(reports.front()));
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    text = dump(Json{{"passed", all_pass}, {"reports", arr}});
  }
  emit(cfg, text, out);
  if (!cfg.roots_csv_path.empty()) {
    std::ofstream file(cfg.roots_csv_path);
    if (!file) throw Error(Errc::OutOfRange, "cannot write " + cfg.roots_csv_path);
    for (std::size_t i = 0; i < reports.size(); ++i) file << roots_csv(reports[i], i == 0);
  }
  return all_pass ? Ok : ContractFailure;
}

int cmd_poincare(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n) throw Error(Errc::OutOfRange, "--n is required");
  const std::int64_t n = *cfg.n;
  Real r;
  if (n == 0) {
    if (cfg.minus) throw Error(Errc::OutOfRange, "--minus needs n >= 1");
    r = poincare_const(cfg.k, cfg.l, cfg.cmax);
  } else if (n > 0) {
    r = cfg.minus ? poincare_cminus(cfg.k, cfg.l, n, cfg.cmax) : poincare_cplus(cfg.k, cfg.l, n, cfg.cmax);
  } else {
    throw Error(Errc::OutOfRange, "--n must be >= 0");
  }
  emit(cfg, dump(to_json(r, cfg.cmax)), out);
  return Ok;
}

int cmd_mock_delta(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n || *cfg.n < 1) throw Error(Errc::OutOfRange, "--n >= 1 is required");
  emit(cfg, dump(to_json(mock_delta_coeff(*cfg.n, cfg.cmax), cfg.cmax)), out);
  return Ok;
}

int cmd_faber(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n || *cfg.n < 0) throw Error(Errc::OutOfRange, "--n >= 0 is required");
  if (*cfg.n > 200) throw Error(Errc::OutOfRange, "--n must be <= 200");
  const Faber f = faber(static_cast<int>(*cfg.n), cfg.precision);
  emit(cfg,
       dump(Json{{"n", *cfg.n}, {"poly", f.poly.to_string()}, {"coeffs", to_json(f.poly)}, {"series", to_json(f.series)}}),
       out);
  return Ok;
}

int cmd_eisenstein(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, dump(to_json(eisenstein(cfg.k, cfg.precision))), out);
  return Ok;
}

// Named forms: E<k>, delta, cusp<k>; anything else is a q-series JSON file.
QSeries load_series(const std::string& name, std::int64_t precision) {
  static const std::regex eis(R"(E(\d+))"), cusp(R"(cusp(\d+))");
  std::smatch m;
  if (name == "delta") return delta(precision);
  if (std::regex_match(name, m, eis)) return eisenstein(std::stoi(m[1]), precision);
  if (std::regex_match(name, m, cusp)) return cusp_eigenform(std::stoi(m[1]), precision);
  std::ifstream in(name);
  if (!in) throw Error(Errc::ParseError, "cannot open series file " + name);
  try {
    return qseries_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, name + ": " + e.what());
  }
}

int cmd_divisor_poly(const RunConfig& cfg, std::ostream& out) {
  if (cfg.series.empty()) throw Error(Errc::OutOfRange, "--series is required");
  const RPoly p = divisor_polynomial(load_series(cfg.series, cfg.precision), cfg.k);
  emit(cfg, dump(Json{{"k", cfg.k}, {"poly", p.to_string()}, {"coeffs", to_json(p)}}), out);
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke polynomials of weak Hecke eigenforms and their zeros", "hecke-zeros"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "index n"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "write output to PATH"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--csv", cfg.csv, "same as --format csv");
  };

  auto* hp = app.add_subcommand("hecke-poly", "exact P_n(F;x)");
  hp->add_option("--form", cfg.form, "spec JSON path, or R");
  add_n(hp);
  hp->add_option("--n-range", cfg.n_range, "A..B");
  hp->add_option("--precision", cfg.precision, "accepted for symmetry; precision is chosen automatically");
  add_format(hp);
  add_out(hp);

  auto* vf = app.add_subcommand("verify", "zero location checks for P_n(F;x)");
  vf->add_option("--form", cfg.form, "spec JSON path, or R");
  add_n(vf);
  vf->add_option("--n-range", cfg.n_range, "A..B");
  vf->add_option("--grid", cfg.grid, "theta grid points");
  vf->add_option("--roots-csv", cfg.roots_csv_path, "write isolated roots as CSV");
  add_format(vf);
  add_out(vf);

  auto* pc = app.add_subcommand("poincare", "Fourier coefficient of the Maass-Poincare series F_{2-k,-l}");
  pc->add_option("--k", cfg.k, "shadow weight");
  pc->add_option("--l", cfg.l, "pole order");
  add_n(pc);
  pc->add_flag("--minus", cfg.minus, "nonholomorphic coefficient");
  pc->add_option("--cmax", cfg.cmax, "last Kloosterman modulus");
  add_out(pc);

  auto* md = app.add_subcommand("mock-delta", "coefficient of the mock modular form attached to Delta");
  add_n(md);
  md->add_option("--cmax", cfg.cmax, "last Kloosterman modulus");
  add_out(md);

  auto* fb = app.add_subcommand("faber", "Faber polynomial J_n");
  add_n(fb);
  fb->add_option("--precision", cfg.precision, "series precision");
  add_out(fb);

  auto* es = app.add_subcommand("eisenstein", "q-expansion of E_k");
  es->add_option("--k", cfg.k, "weight");
  es->add_option("--precision", cfg.precision, "series precision");
  add_out(es);

  auto* dp = app.add_subcommand("divisor-poly", "divisor polynomial of a modular form");
  dp->add_option("--k", cfg.k, "weight");
  dp->add_option("--series", cfg.series, "q-series JSON path, or E<k>, delta, cusp<k>");
  dp->add_option("--precision", cfg.precision, "precision for named forms");
  add_out(dp);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UserError;
  }

  try {
    if (*hp) return cmd_hecke_poly(cfg, out);
    if (*vf) return cmd_verify(cfg, out);
    if (*pc) return cmd_poincare(cfg, out);
    if (*md) return cmd_mock_delta(cfg, out);
    if (*fb) return cmd_faber(cfg, out);
    if (*es) return cmd_eisenstein(cfg, out);
    if (*dp) return cmd_divisor_poly(cfg, out);
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == Errc::DegreeMismatch ? InternalError : UserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return InternalError;
  }
  return UserError;
}

}  // namespace hz::cli
