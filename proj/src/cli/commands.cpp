#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "eufro/apportion.hpp"
#include "eufro/asymptotics.hpp"
#include "eufro/cli.hpp"
#include "eufro/ef_core.hpp"
#include "eufro/output.hpp"
#include "eufro/rounding.hpp"
#include "eufro/selftest.hpp"
#include "eufro/uniform_sum.hpp"

namespace eufro {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "text";
  bool with_float = false;
};

void put_exact(json& row, const std::string& key, const Rational& q, bool with_float) {
  row[key] = q.get_str();
  if (with_float) row[key + "_float"] = q.get_d();
}

void add_exact_column(std::vector<std::string>& cols, const std::string& key, bool with_float) {
  cols.push_back(key);
  if (with_float) cols.push_back(key + "_float");
}

void emit(const OutputRecord& rec, const Global& g, std::ostream& out) {
  if (g.format == "json") out << rec.to_json_string();
  else if (g.format == "csv") out << rec.to_csv();
  else out << rec.to_text();
}

std::uint64_t default_samples() {
  const char* env = std::getenv("EUFRO_DEFAULT_SAMPLES");
  if (!env || !*env) return 1000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("EUFRO_DEFAULT_SAMPLES must be a positive integer");
  return v;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  int n_max = 3;
  std::string rho = "symbolic";
  bool type_b = false;
};

int cmd_table(const TableArgs& a, const Global& g, std::ostream& out) {
  if (a.n_max < 0) throw UsageError("--n-max must be nonnegative");
  OutputRecord rec;
  rec.command = "table";
  rec.params = {{"n_max", a.n_max}, {"rho", a.type_b ? "1/2" : a.rho}, {"type_b", a.type_b}};
  rec.columns = {"n", "k"};
  bool symbolic = a.rho == "symbolic" && !a.type_b;
  add_exact_column(rec.columns, "value", g.with_float && !symbolic);
  std::optional<Rational> rho;
  if (!symbolic && !a.type_b) rho = parse_rational(a.rho);
  std::vector<std::vector<std::string>> triangle;
  for (int n = 0; n <= a.n_max; ++n) {
    std::vector<std::string> line;
    std::vector<RhoPoly> polys;
    std::vector<BigInt> ints;
    std::vector<Rational> vals;
    if (symbolic) polys = ef_row_poly(n);
    else if (a.type_b) ints = type_b_row(n);
    else vals = ef_row<Rational>(n, *rho).values;
    for (int k = 0; k <= n; ++k) {
      json row = {{"n", n}, {"k", k}};
      if (symbolic) {
        row["value"] = to_string(polys[k], "rho");
      } else {
        put_exact(row, "value", a.type_b ? Rational(ints[k]) : vals[k], g.with_float);
      }
      line.push_back(row["value"].get<std::string>());
      rec.rows.push_back(std::move(row));
    }
    triangle.push_back(std::move(line));
  }
  if (g.format == "text") {
    for (std::size_t n = 0; n < triangle.size(); ++n) {
      out << n << ":";
      for (const auto& v : triangle[n]) out << "  " << v;
      out << "\n";
    }
    return exit_ok;
  }
  emit(rec, g, out);
  return exit_ok;
}

// ---------------------------------------------------------------- pmf / cdf / moments

struct DistArgs {
  int n = 1;
  std::string rho = "0";
  std::optional<long> k;
  std::optional<int> m;
};

void check_n(int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
}

int cmd_pmf(const DistArgs& a, const Global& g, std::ostream& out) {
  check_n(a.n);
  Rational rho = parse_rational(a.rho);
  auto d = ef_distribution(a.n, rho);
  OutputRecord rec;
  rec.command = "pmf";
  rec.params = {{"n", a.n}, {"rho", rho.get_str()}};
  rec.columns = {"k"};
  add_exact_column(rec.columns, "probability", g.with_float);
  for (std::size_t i = 0; i < d.pmf.weights.size(); ++i) {
    json row = {{"k", d.pmf.offset + static_cast<long>(i)}};
    put_exact(row, "probability", d.pmf.weights[i], g.with_float);
    rec.rows.push_back(std::move(row));
  }
  emit(rec, g, out);
  return exit_ok;
}

int cmd_cdf(const DistArgs& a, const Global& g, std::ostream& out) {
  check_n(a.n);
  Rational rho = parse_rational(a.rho);
  OutputRecord rec;
  rec.command = "cdf";
  rec.params = {{"n", a.n}, {"rho", rho.get_str()}};
  rec.columns = {"k"};
  add_exact_column(rec.columns, "cdf", g.with_float);
  std::vector<long> ks;
  if (a.k) {
    ks.push_back(*a.k);
    rec.params["k"] = *a.k;
  } else {
    auto d = ef_distribution(a.n, rho);
    for (long k = d.pmf.min_support(); k <= d.pmf.max_support(); ++k) ks.push_back(k);
  }
  for (long k : ks) {
    json row = {{"k", k}};
    put_exact(row, "cdf", ef_cdf(a.n, rho, k), g.with_float);
    rec.rows.push_back(std::move(row));
  }
  emit(rec, g, out);
  return exit_ok;
}

int cmd_moments(const DistArgs& a, const Global& g, std::ostream& out) {
  check_n(a.n);
  Rational rho = parse_rational(a.rho);
  OutputRecord rec;
  rec.command = "moments";
  rec.params = {{"n", a.n}, {"rho", rho.get_str()}};
  rec.columns = {"m"};
  add_exact_column(rec.columns, "moment", g.with_float);
  add_exact_column(rec.columns, "cumulant", g.with_float);
  int lo = 1, hi = std::max(a.n, 2);
  if (a.m) {
    if (*a.m < 1) throw UsageError("--m must be at least 1");
    lo = hi = *a.m;
    rec.params["m"] = *a.m;
  }
  for (int m = lo; m <= hi; ++m) {
    json row = {{"m", m}};
    put_exact(row, "moment", ef_moment(a.n, rho, m), g.with_float);
    put_exact(row, "cumulant", ef_cumulant(a.n, rho, m), g.with_float);
    rec.rows.push_back(std::move(row));
  }
  emit(rec, g, out);
  return exit_ok;
}

// ---------------------------------------------------------------- llt / ldev

struct AsymArgs {
  int n = 32;
  std::string rho = "1/2";
  int ell = 2;
};

int cmd_llt(const AsymArgs& a, const Global& g, std::ostream& out) {
  check_n(a.n);
  Rational rho = parse_rational(a.rho);
  if (rho < 0 || rho > 1) throw UsageError("--rho must lie in [0,1]");
  if (a.ell < 0) throw UsageError("--ell must be nonnegative");
  auto row_exact = ef_row<Rational>(a.n, rho).values;
  Rational nf(factorial(a.n));
  OutputRecord rec;
  rec.command = "llt";
  rec.params = {{"n", a.n}, {"rho", rho.get_str()}, {"ell", a.ell}};
  rec.columns = {"k", "exact", "exact_float", "approx", "abs_error", "rel_error"};
  double max_err = 0;
  for (int k = 0; k <= a.n; ++k) {
    Rational p = row_exact[k] / nf;
    double ex = p.get_d();
    double ap = llt_approx(a.n, k, rho.get_d(), a.ell);
    double err = std::abs(ap - ex);
    max_err = std::max(max_err, err);
    json row = {{"k", k}, {"exact", p.get_str()}, {"exact_float", ex}, {"approx", ap}, {"abs_error", err}};
    row["rel_error"] = ex != 0 ? json(err / ex) : json(nullptr);
    rec.rows.push_back(std::move(row));
  }
  rec.summary = {{"max_abs_error", max_err}};
  emit(rec, g, out);
  return exit_ok;
}

int cmd_ldev(const AsymArgs& a, const Global& g, std::ostream& out) {
  check_n(a.n);
  Rational rho = parse_rational(a.rho);
  if (rho < 0 || rho > 1) throw UsageError("--rho must lie in [0,1]");
  auto row_exact = ef_row<Rational>(a.n, rho).values;
  Rational nf(factorial(a.n));
  OutputRecord rec;
  rec.command = "ldev";
  rec.params = {{"n", a.n}, {"rho", rho.get_str()}};
  rec.columns = {"k", "a", "exact", "exact_float", "approx", "ratio"};
  double worst = 0;
  for (int k = 0; k <= a.n; ++k) {
    Rational y = k + rho;
    if (y <= 0 || y >= a.n + 1) continue;
    Rational p = row_exact[k] / nf;
    double ex = p.get_d();
    double ap = ldev_approx(a.n, k, rho.get_d());
    json row = {{"k", k}, {"a", Rational(y / (a.n + 1)).get_d()}, {"exact", p.get_str()}, {"exact_float", ex},
                {"approx", ap}};
    if (ex > 0) {
      row["ratio"] = ap / ex;
      worst = std::max(worst, std::abs(ap / ex - 1));
    } else {
      row["ratio"] = nullptr;
    }
    rec.rows.push_back(std::move(row));
  }
  rec.summary = {{"max_abs_ratio_minus_one", worst}};
  emit(rec, g, out);
  return exit_ok;
}

// ---------------------------------------------------------------- simulate

struct SimArgs {
  std::string kind;
  std::string config;
  std::map<std::string, std::string> overrides;
};

// Flat config map; CLI flags win over the file.
class SimConfig {
 public:
  SimConfig(const std::string& path, const std::map<std::string, std::string>& overrides) {
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open config file " + path);
      json j = json::parse(in);
      if (!j.is_object()) throw UsageError("config file must hold a flat JSON object");
      for (auto& [key, value] : j.items()) {
        if (value.is_object() || value.is_array()) {
          if (key == "N" && value.is_array()) {
            std::string joined;
            for (const auto& v : value) joined += (joined.empty() ? "" : ",") + render_cell(v);
            values_[key] = joined;
            continue;
          }
          throw UsageError("config value for " + key + " must be a scalar");
        }
        values_[key] = render_cell(value);
      }
    }
    for (const auto& [k, v] : overrides) values_[k] = v;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  Rational rational(const std::string& key, const std::string& fallback) const {
    return parse_rational(text(key, fallback));
  }
  long integer(const std::string& key, long fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    Rational q = parse_rational(it->second);
    if (q.get_den() != 1) throw UsageError(key + " must be an integer");
    return to_long(q.get_num());
  }
  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    Rational q = parse_rational(it->second);
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p())
      throw UsageError(key + " must be a nonnegative integer");
    return q.get_num().get_ui();
  }

 private:
  std::map<std::string, std::string> values_;
};

void fill_sim_rows(OutputRecord& rec, const EmpiricalPmf& e, const IntPmf<Rational>& exact) {
  long lo = exact.min_support(), hi = exact.max_support();
  if (!e.pmf.weights.empty()) {
    lo = std::min(lo, e.pmf.min_support());
    hi = std::max(hi, e.pmf.max_support());
  }
  rec.columns = {"k", "empirical", "theoretical", "stderr"};
  for (long k = lo; k <= hi; ++k)
    rec.rows.push_back(
        {{"k", k}, {"empirical", e.probability(k)}, {"theoretical", exact.probability(k).get_d()}, {"stderr", e.std_error(k)}});
  Rational mean(0), second(0);
  for (long k = exact.min_support(); k <= exact.max_support(); ++k) {
    mean += k * exact.probability(k);
    second += k * k * exact.probability(k);
  }
  rec.summary = {{"tv_distance", total_variation(e, exact)},
                 {"mean", e.mean},
                 {"mean_theory", mean.get_d()},
                 {"mean_stderr", e.mean_std_error()},
                 {"variance", e.variance},
                 {"variance_theory", Rational(second - mean * mean).get_d()},
                 {"samples", e.samples}};
}

int cmd_simulate(const SimArgs& a, const Global& g, std::ostream& out) {
  SimConfig cfg(a.config, a.overrides);
  SimulationOptions opts;
  opts.seed = cfg.unsigned_integer("seed", 1);
  opts.streams = static_cast<unsigned>(cfg.unsigned_integer("streams", 1));
  if (opts.streams < 1) throw UsageError("streams must be at least 1");
  std::uint64_t samples = cfg.unsigned_integer("samples", default_samples());
  if (samples < 1) throw UsageError("samples must be at least 1");

  OutputRecord rec;
  rec.command = "simulate " + a.kind;
  rec.params = {{"seed", opts.seed}, {"streams", opts.streams}, {"samples", samples}};

  if (a.kind == "round" || a.kind == "symmetric") {
    int n = static_cast<int>(cfg.integer("n", a.kind == "round" ? 5 : 2));
    check_n(n);
    rec.params["n"] = n;
    if (a.kind == "round") {
      Rational rho = cfg.rational("rho", "3/10");
      rec.params["rho"] = rho.get_str();
      fill_sim_rows(rec, simulate_rounded_sum(n, rho.get_d(), samples, opts), ef_distribution(n, rho).pmf);
    } else {
      fill_sim_rows(rec, simulate_symmetric(n, samples, opts), ef_distribution(n, make_rational(n + 1, 2)).pmf);
    }
  } else if (a.kind == "discrepancy") {
    DiscrepancyExperiment exp;
    exp.n = static_cast<int>(cfg.integer("n", 3));
    Rational rho = cfg.rational("rho", "1/2");
    Rational gamma = cfg.rational("gamma", "0");
    exp.rho = rho.get_d();
    exp.gamma = gamma.get_d();
    exp.N = cfg.integer("N", 10000);
    exp.samples = samples;
    exp.seed = opts.seed;
    rec.params["n"] = exp.n;
    rec.params["rho"] = rho.get_str();
    rec.params["gamma"] = gamma.get_str();
    rec.params["N"] = exp.N;
    fill_sim_rows(rec, simulate_discrepancy(exp, opts.streams), discrepancy_exact_pmf(exp.n, rho, gamma));
  } else if (a.kind == "seat-bias") {
    int n = static_cast<int>(cfg.integer("n", 3));
    Rational p1 = cfg.rational("p1", "0.37");
    std::string method = cfg.text("method", "hare");
    if (method != "hare" && method != "droop") throw UsageError("method must be hare or droop");
    std::vector<long> houses;
    std::string list = cfg.text("N", "10000");
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t comma = list.find(',', pos);
      std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      Rational q = parse_rational(item);
      if (q.get_den() != 1) throw UsageError("house sizes must be integers");
      houses.push_back(to_long(q.get_num()));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rec.params["n"] = n;
    rec.params["p1"] = p1.get_str();
    rec.params["method"] = method;
    rec.params["N"] = houses;
    auto rows = simulate_seat_bias(n, p1, method == "hare" ? QuotaMethod::hare : QuotaMethod::droop, houses,
                                   samples, opts);
    rec.columns = {"N", "k", "excess", "empirical", "theoretical", "stderr"};
    double worst = 0;
    for (const auto& r : rows) {
      rec.rows.push_back({{"N", r.N},
                          {"k", r.k},
                          {"excess", Rational(r.k - r.shift).get_str()},
                          {"empirical", r.empirical},
                          {"theoretical", r.theoretical},
                          {"stderr", r.std_error}});
      worst = std::max(worst, std::abs(r.empirical - r.theoretical));
    }
    rec.summary = {{"max_abs_difference", worst}};
  } else {
    throw UsageError("unknown simulation kind '" + a.kind + "' (round, symmetric, discrepancy, seat-bias)");
  }
  emit(rec, g, out);
  return exit_ok;
}

// ---------------------------------------------------------------- apportion

struct ApportionArgs {
  std::string method;
  std::vector<std::string> votes;
  long seats = -1;
  std::optional<std::string> rho;
  std::vector<std::string> aliases;
};

int cmd_apportion(const ApportionArgs& a, const Global& g, std::ostream& out) {
  if (a.votes.empty()) throw UsageError("no votes given");
  std::vector<Rational> votes;
  for (const auto& v : a.votes) votes.push_back(parse_rational(v));
  auto table = default_divisor_aliases();
  for (const auto& spec : a.aliases) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--alias expects name=rho, got " + spec);
    table[spec.substr(0, eq)] = parse_rational(spec.substr(eq + 1));
  }

  ApportionmentOutcome res;
  std::string method = a.method;
  if (method == "hare") {
    res = apportion_hare(votes, a.seats);
  } else if (method == "droop") {
    res = apportion_droop(votes, a.seats);
  } else if (method == "divisor") {
    res = apportion_divisor(votes, a.seats, parse_rational(a.rho.value_or("1/2")));
  } else if (auto it = table.find(method); it != table.end()) {
    if (a.rho) throw UsageError("--rho conflicts with the named method " + method);
    res = apportion_divisor(votes, a.seats, it->second);
  } else {
    throw UsageError("unknown method '" + method + "'");
  }

  if (g.format == "text") {
    for (std::size_t i = 0; i < res.seats.size(); ++i) out << (i ? " " : "") << res.seats[i];
    out << "\n";
    return exit_ok;
  }
  OutputRecord rec;
  rec.command = "apportion";
  rec.params = {{"method", method}, {"seats", a.seats}};
  rec.columns = {"party", "votes", "seats"};
  for (std::size_t i = 0; i < res.seats.size(); ++i)
    rec.rows.push_back({{"party", i + 1}, {"votes", votes[i].get_str()}, {"seats", res.seats[i]}});
  rec.summary = {{"divisor_or_quota", res.divisor_or_quota.get_str()},
                 {"divisor_or_quota_float", res.divisor_or_quota.get_d()},
                 {"method", to_string(res.method)}};
  if (res.rho) rec.summary["rho"] = res.rho->get_str();
  emit(rec, g, out);
  return exit_ok;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(bool quick, std::uint64_t seed, const Global& g, std::ostream& out) {
  auto results = run_selftest(quick, seed);
  bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (g.format == "text") {
    for (const auto& r : results)
      out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  } else {
    OutputRecord rec;
    rec.command = "selftest";
    rec.params = {{"quick", quick}, {"seed", seed}};
    rec.columns = {"check", "passed", "detail"};
    for (const auto& r : results) rec.rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    rec.summary = {{"all_passed", ok}};
    emit(rec, g, out);
  }
  return ok ? exit_ok : exit_selftest;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-Frobenius numbers, rounded uniform sums and their applications", "eufro"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--float", g.with_float, "Add binary64 columns next to exact values");

  TableArgs table;
  auto* sc_table = app.add_subcommand("table", "Triangle of A(n,k,rho), symbolic in rho or at a value");
  sc_table->add_option("--n-max", table.n_max, "Last row");
  sc_table->add_option("--rho", table.rho, "'symbolic' or a rational value");
  sc_table->add_flag("--type-b", table.type_b, "Eulerian numbers of type B instead");

  DistArgs pmf, cdf, moments;
  auto* sc_pmf = app.add_subcommand("pmf", "Exact law of Z(n,rho)");
  auto* sc_cdf = app.add_subcommand("cdf", "P(Z(n,rho) <= k)");
  auto* sc_mom = app.add_subcommand("moments", "Raw moments and cumulants of Z(n,rho)");
  for (auto [sc, d] : {std::pair{sc_pmf, &pmf}, std::pair{sc_cdf, &cdf}, std::pair{sc_mom, &moments}}) {
    sc->add_option("--n", d->n, "Number of uniforms")->required();
    sc->add_option("--rho", d->rho, "Rounding parameter (rational or decimal)");
  }
  sc_cdf->add_option("--k", cdf.k, "Single k");
  sc_mom->add_option("--m", moments.m, "Single order");

  AsymArgs llt, ldev;
  auto* sc_llt = app.add_subcommand("llt", "Local limit expansion against the exact law");
  auto* sc_ldev = app.add_subcommand("ldev", "Saddle-point approximation against the exact law");
  for (auto [sc, d] : {std::pair{sc_llt, &llt}, std::pair{sc_ldev, &ldev}}) {
    sc->add_option("--n", d->n, "Number of uniforms")->required();
    sc->add_option("--rho", d->rho, "Rounding parameter in [0,1]");
  }
  sc_llt->add_option("--ell", llt.ell, "Number of correction terms");

  SimArgs sim;
  auto* sc_sim = app.add_subcommand("simulate", "Seeded Monte Carlo check of a rounding law");
  sc_sim->add_option("kind", sim.kind, "round | symmetric | discrepancy | seat-bias")->required();
  sc_sim->add_option("--config", sim.config, "Flat JSON map of parameters");
  std::map<std::string, std::string> raw;
  for (const char* key : {"seed", "samples", "streams", "n", "rho", "gamma", "p1", "method"})
    sc_sim->add_option(std::string("--") + key, raw[key]);
  sc_sim->add_option("--N,--house", raw["N"], "House size / grand total (comma list for seat-bias)");

  ApportionArgs ap;
  auto* sc_ap = app.add_subcommand("apportion", "Seats from votes");
  sc_ap->add_option("method", ap.method, "hare | droop | divisor | named divisor method")->required();
  sc_ap->add_option("votes", ap.votes, "Vote counts or shares")->required();
  sc_ap->add_option("--seats", ap.seats, "House size")->required();
  sc_ap->add_option("--rho", ap.rho, "Rounding parameter of the divisor method (default 1/2)");
  sc_ap->add_option("--alias", ap.aliases, "Extra or replacement named method, name=rho")->allow_extra_args(false);

  bool quick = false;
  std::uint64_t seed = 20240601;
  auto* sc_self = app.add_subcommand("selftest", "Run the identity suite");
  sc_self->add_flag("--quick", quick, "Only n <= 10");
  sc_self->add_option("--seed", seed, "Seed for the stochastic check");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sc_table->parsed()) return cmd_table(table, g, out);
    if (sc_pmf->parsed()) return cmd_pmf(pmf, g, out);
    if (sc_cdf->parsed()) return cmd_cdf(cdf, g, out);
    if (sc_mom->parsed()) return cmd_moments(moments, g, out);
    if (sc_llt->parsed()) return cmd_llt(llt, g, out);
    if (sc_ldev->parsed()) return cmd_ldev(ldev, g, out);
    if (sc_sim->parsed()) {
      for (auto& [key, value] : raw)
        if (sc_sim->count("--" + key) > 0) sim.overrides[key] = value;
      return cmd_simulate(sim, g, out);
    }
    if (sc_ap->parsed()) return cmd_apportion(ap, g, out);
    if (sc_self->parsed()) return cmd_selftest(quick, seed, g, out);
  } catch (const TieError& e) {
    err << "tie: " << e.what() << "\n";
    return exit_tie;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_usage;
  } catch (const json::exception& e) {
    err << "bad config: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace eufro
