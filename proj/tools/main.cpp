// Command-line surface for the subgroup-growth / random-cover pipeline:
// exact coefficients, orbit tables, biased-measure moments, asymptotic
// predictions, CLT scans, saddle diagnostics, log-concavity scans, and
// the oracle-equivalence verification suites.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "subgrowth/asymptotics.hpp"
#include "subgrowth/catalog.hpp"
#include "subgrowth/measure.hpp"

namespace {

using namespace subgrowth;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;

struct RunConfig {
  std::string group;
  std::string x = "1";
  int n = -1;
  std::vector<int> n_grid;
  int max_n = -1;
  double tol = 1e-6;
  double quad_tol = 1e-10;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string cache_dir;
  std::string format = "csv";
  std::string out;
  std::string catalog_path;
  std::string suite = "all";
};

struct XValue {
  bool exact = false;
  mpq_class rational;  // exact mode
  double real = 1.0;   // always usable
  std::string repr;
};

// "p" or "p/q" triggers exact mode; decimals route to floating mode
XValue parse_x(const std::string& s) {
  XValue x;
  x.repr = s;
  static const std::regex rational_re("^[0-9]+(/[1-9][0-9]*)?$");
  if (std::regex_match(s, rational_re)) {
    x.exact = true;
    x.rational.set_str(s, 10);
    x.rational.canonicalize();
    x.real = x.rational.get_d();
  } else {
    std::size_t pos = 0;
    x.real = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad value for --x: " + s);
  }
  if (!(x.real > 0)) throw std::invalid_argument("--x must be positive");
  return x;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

groups::Catalog load_catalog(const RunConfig& cfg) {
  return cfg.catalog_path.empty() ? groups::Catalog::builtin()
                                  : groups::Catalog::load(cfg.catalog_path);
}

std::unique_ptr<orbits::RowCache> make_cache(const RunConfig& cfg) {
  if (cfg.cache_dir.empty()) return nullptr;
  return std::make_unique<orbits::RowCache>(cfg.cache_dir);
}

// Coefficient table long enough for both the recurrence and the W tails
// at the saddle points of the largest grid entry.
std::size_t coeff_length(const RunConfig& cfg, int n_max) {
  if (cfg.max_n > 0) return static_cast<std::size_t>(std::max(cfg.max_n, n_max));
  return static_cast<std::size_t>(std::max(2000, 16 * n_max));
}

void emit_metadata_csv(std::ostream& os, const RunConfig& cfg,
                       const groups::CoeffTable& coeffs) {
  os << "# group=" << coeffs.group << " x=" << cfg.x << " tol=" << fmt(cfg.tol)
     << " quad_tol=" << fmt(cfg.quad_tol) << " coeff_n=" << coeffs.size()
     << " coeff_checksum=" << coeffs.checksum() << "\n";
}

json metadata_json(const RunConfig& cfg, const groups::CoeffTable& coeffs) {
  return json{{"group", coeffs.group},
              {"x", cfg.x},
              {"tol", cfg.tol},
              {"quad_tol", cfg.quad_tol},
              {"coeff_n", coeffs.size()},
              {"coeff_checksum", std::to_string(coeffs.checksum())}};
}

int cmd_coeffs(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  int n = cfg.max_n > 0 ? cfg.max_n : 20;
  if (n > 10'000'000) throw std::invalid_argument("--max-n too large");
  auto table = groups::coeffs(spec, n);
  Output out(cfg.out);
  if (cfg.format == "json") {
    json rows = json::array();
    for (int i = 1; i <= n; ++i) rows.push_back(table[i].get_str());
    out.os() << json{{"metadata", metadata_json(cfg, table)}, {"a_n", rows}}.dump(2)
             << "\n";
  } else {
    emit_metadata_csv(out.os(), cfg, table);
    out.os() << "n,a_n\n";
    for (int i = 1; i <= n; ++i) out.os() << i << "," << table[i].get_str() << "\n";
  }
  return kExitOk;
}

int cmd_orbit_table(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  int n = cfg.n >= 0 ? cfg.n : (cfg.max_n > 0 ? cfg.max_n : 10);
  auto coeffs = groups::coeffs(spec, std::max(n, 1));
  auto cache = make_cache(cfg);
  auto rows = orbits::orbit_tables(coeffs, n, cache.get());
  Output out(cfg.out);
  if (cfg.format == "json") {
    json jrows = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (const auto& a : row.A) r.push_back(a.get_str());
      jrows.push_back(std::move(r));
    }
    out.os() << json{{"metadata", metadata_json(cfg, coeffs)}, {"rows", jrows}}.dump(2)
             << "\n";
  } else {
    emit_metadata_csv(out.os(), cfg, coeffs);
    out.os() << "n,k,A\n";
    for (const auto& row : rows)
      for (int k = 0; k <= row.n; ++k)
        out.os() << row.n << "," << k << "," << row.A[k].get_str() << "\n";
  }
  return kExitOk;
}

measure::Pmf make_pmf(const orbits::OrbitTable& row, const XValue& x) {
  return x.exact ? measure::pmf(row, x.rational) : measure::pmf(row, x.real);
}

int cmd_moments(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  if (cfg.n < 1) throw std::invalid_argument("moments: --n is required (>= 1)");
  XValue x = parse_x(cfg.x);
  auto coeffs = groups::coeffs(spec, cfg.n);
  auto cache = make_cache(cfg);
  auto rows = orbits::orbit_tables(coeffs, cfg.n, cache.get());
  auto p = make_pmf(rows[cfg.n], x);
  auto mom = measure::exact_moments(p);
  double ks = mom.variance > 0
                  ? measure::kolmogorov_distance(p, mom.mean, std::sqrt(mom.variance))
                  : 1.0;

  json report{{"group", cfg.group},
              {"n", cfg.n},
              {"x", cfg.x},
              {"mean", mom.exact ? json(mom.mean_q.get_str()) : json(fmt(mom.mean))},
              {"variance", mom.exact ? json(mom.var_q.get_str()) : json(fmt(mom.variance))},
              {"skewness", fmt(mom.skewness)},
              {"excess_kurtosis", fmt(mom.excess_kurtosis)},
              {"kolmogorov", fmt(ks)}};
  if (cfg.samples > 0) {
    auto draws = measure::sample(p, cfg.samples, cfg.seed);
    double s = 0;
    for (int k : draws) s += k;
    report["seed"] = cfg.seed;
    report["rng_id"] = measure::kRngId;
    report["sample_mean"] = fmt(s / static_cast<double>(draws.size()));
  }
  Output out(cfg.out);
  out.os() << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_predict(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  if (cfg.n < 2) throw std::invalid_argument("predict: --n is required (>= 2)");
  XValue x = parse_x(cfg.x);
  auto sing = asymptotics::SingularData::from_spec(spec);
  auto coeffs = groups::coeffs(spec, coeff_length(cfg, cfg.n));
  asymptotics::WFunctions w(coeffs, sing.alpha);
  auto [a_n, b_n] = asymptotics::refined_center_scale(w, sing, cfg.n, x.real);
  json report{{"group", cfg.group},
              {"n", cfg.n},
              {"x", cfg.x},
              {"predicted_mean", fmt(asymptotics::predicted_mean(sing, cfg.n, x.real))},
              {"predicted_variance", fmt(asymptotics::predicted_variance(sing, cfg.n, x.real))},
              {"refined_a_n", fmt(a_n)},
              {"b_n_sq", fmt(b_n * b_n)},
              {"alpha", fmt(sing.alpha)},
              {"m", sing.m},
              {"gamma", fmt(sing.gamma)},
              {"K", fmt(sing.K)}};
  Output out(cfg.out);
  out.os() << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_clt_scan(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  XValue x = parse_x(cfg.x);
  Output out(cfg.out);

  auto grid = cfg.n_grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 2) throw std::invalid_argument("clt-scan: every n must be >= 2");
    if (i > 0 && grid[i] < grid[i - 1])
      throw std::invalid_argument("clt-scan: n-grid must be nondecreasing");
  }
  const char* header =
      "n,exact_mean,exact_var,predicted_mean,predicted_var,refined_a_n,b_n_sq,"
      "skewness,excess_kurtosis,kolmogorov,B_n,mean_ratio,var_ratio\n";
  if (grid.empty()) {
    if (cfg.format != "json") out.os() << header;
    else out.os() << json{{"rows", json::array()}}.dump(2) << "\n";
    return kExitOk;
  }

  int n_max = grid.back();
  auto coeffs = groups::coeffs(spec, coeff_length(cfg, n_max));
  auto sing = asymptotics::SingularData::from_spec(spec);
  asymptotics::WFunctions w(coeffs, sing.alpha);
  auto cache = make_cache(cfg);
  auto rows = orbits::orbit_tables(coeffs, n_max, cache.get());

  json jrows = json::array();
  std::ostringstream csv;
  for (int n : grid) {
    auto p = make_pmf(rows[n], x);
    auto mom = measure::exact_moments(p);
    double sd = std::sqrt(mom.variance);
    double ks = measure::kolmogorov_distance(p, mom.mean, sd);
    double pm = asymptotics::predicted_mean(sing, n, x.real);
    double pv = asymptotics::predicted_variance(sing, n, x.real);
    auto [a_n, b_n] = asymptotics::refined_center_scale(w, sing, n, x.real);
    double t_n = w.w0_inverse(n / x.real);
    double big_b = x.real * w.eval(-1, t_n) / mom.variance;
    csv << n << "," << fmt(mom.mean) << "," << fmt(mom.variance) << "," << fmt(pm)
        << "," << fmt(pv) << "," << fmt(a_n) << "," << fmt(b_n * b_n) << ","
        << fmt(mom.skewness) << "," << fmt(mom.excess_kurtosis) << "," << fmt(ks)
        << "," << fmt(big_b) << "," << fmt(mom.mean / a_n) << ","
        << fmt(mom.variance / (b_n * b_n)) << "\n";
    jrows.push_back(json{{"n", n},
                         {"exact_mean", fmt(mom.mean)},
                         {"exact_var", fmt(mom.variance)},
                         {"predicted_mean", fmt(pm)},
                         {"predicted_var", fmt(pv)},
                         {"refined_a_n", fmt(a_n)},
                         {"b_n_sq", fmt(b_n * b_n)},
                         {"skewness", fmt(mom.skewness)},
                         {"excess_kurtosis", fmt(mom.excess_kurtosis)},
                         {"kolmogorov", fmt(ks)},
                         {"B_n", fmt(big_b)},
                         {"mean_ratio", fmt(mom.mean / a_n)},
                         {"var_ratio", fmt(mom.variance / (b_n * b_n))}});
  }
  if (cfg.format == "json") {
    out.os() << json{{"metadata", metadata_json(cfg, coeffs)}, {"rows", jrows}}.dump(2)
             << "\n";
  } else {
    emit_metadata_csv(out.os(), cfg, coeffs);
    out.os() << header << csv.str();
  }
  return kExitOk;
}

int cmd_saddle_check(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  if (cfg.n < 1) throw std::invalid_argument("saddle-check: --n is required (>= 1)");
  XValue x = parse_x(cfg.x);
  auto coeffs = groups::coeffs(spec, coeff_length(cfg, cfg.n));
  auto sing = asymptotics::SingularData::from_spec(spec);
  asymptotics::WFunctions w(coeffs, sing.alpha);
  auto cache = make_cache(cfg);
  auto rows = orbits::orbit_tables(coeffs, cfg.n, cache.get());
  auto rep = asymptotics::saddle_factorization_check(w, rows[cfg.n], x.real, cfg.quad_tol);
  json report{{"group", cfg.group},
              {"n", cfg.n},
              {"x", cfg.x},
              {"t_n", fmt(rep.params.t_n)},
              {"lambda_n", fmt(rep.params.lambda_n)},
              {"J", fmt(rep.params.J)},
              {"logH_exact", fmt(rep.logH_exact)},
              {"logP", fmt(rep.logP)},
              {"logJ", fmt(rep.logJ)},
              {"rel_error", fmt(rep.rel_error)},
              {"quad_tol", fmt(cfg.quad_tol)}};
  Output out(cfg.out);
  out.os() << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_logcc(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  const auto& spec = cat.get(cfg.group);
  int n_max = cfg.max_n > 0 ? cfg.max_n : 60;
  auto coeffs = groups::coeffs(spec, std::max(n_max, 1));
  auto cache = make_cache(cfg);
  auto rows = orbits::orbit_tables(coeffs, n_max, cache.get());

  bool k2_violates = false, k_ge3_violates = false;
  json per_n = json::array();
  for (const auto& row : rows) {
    if (row.n < 3) continue;
    json violations = json::array();
    for (int k = 2; k <= row.n - 1; ++k) {
      if (row.A[k] * row.A[k] < row.A[k - 1] * row.A[k + 1]) {
        violations.push_back(json{{"k", k},
                                  {"A_km1", row.A[k - 1].get_str()},
                                  {"A_k", row.A[k].get_str()},
                                  {"A_kp1", row.A[k + 1].get_str()}});
        (k == 2 ? k2_violates : k_ge3_violates) = true;
      }
    }
    if (!violations.empty())
      per_n.push_back(json{{"n", row.n}, {"violations", violations}});
  }
  json report{{"group", cfg.group},
              {"max_n", n_max},
              {"k2_violates", k2_violates},
              {"k_ge3_violates", k_ge3_violates},
              {"violating_rows", per_n}};
  Output out(cfg.out);
  if (cfg.format == "json") {
    out.os() << json{{"metadata", metadata_json(cfg, coeffs)}, {"report", report}}.dump(2)
             << "\n";
  } else {
    emit_metadata_csv(out.os(), cfg, coeffs);
    out.os() << "n,k,A_km1,A_k,A_kp1\n";
    for (const auto& r : per_n)
      for (const auto& v : r.at("violations"))
        out.os() << r.at("n").get<int>() << "," << v.at("k").get<int>() << ","
                 << v.at("A_km1").get<std::string>() << ","
                 << v.at("A_k").get<std::string>() << ","
                 << v.at("A_kp1").get<std::string>() << "\n";
    out.os() << "# k2_violates=" << (k2_violates ? "yes" : "no")
             << " k_ge3_violates=" << (k_ge3_violates ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// --- verification suites ------------------------------------------------

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

SuiteResult suite_dirichlet() {
  SuiteResult r{"dirichlet", true, ""};
  using namespace dirichlet;
  for (std::size_t n : {64u, 1000u}) {
    IntSeq ones = IntSeq::ones(n);
    if (dirichlet_mul(ones, dirichlet_inverse(ones)) != IntSeq::unit(n)) {
      r.passed = false;
      r.detail = "inverse roundtrip failed at N=" + std::to_string(n);
      return r;
    }
  }
  return r;
}

SuiteResult suite_hermite(const groups::Catalog& cat) {
  SuiteResult r{"hermite", true, ""};
  for (int ell = 1; ell <= 4; ++ell) {
    auto direct = groups::hermite_eisenstein(ell, 500);
    auto viazeta = groups::coeffs(cat.get("Z" + std::to_string(ell)), 500);
    for (std::size_t i = 1; i <= 500; ++i) {
      if (direct[i] != viazeta[i]) {
        r.passed = false;
        r.detail = "Z" + std::to_string(ell) + " mismatch at n=" + std::to_string(i) +
                   ": " + direct[i].get_str() + " vs " + viazeta[i].get_str();
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_brute(const groups::Catalog& cat, int n_max) {
  SuiteResult r{"brute", true, ""};
  for (const std::string& name : {"Z2", "Z3", "heis"}) {
    const auto& spec = cat.get(name);
    auto coeff = groups::coeffs(spec, n_max);
    auto rows = orbits::orbit_tables(coeff, n_max);
    for (int n = 1; n <= n_max; ++n) {
      auto census = groups::brute_force_census(spec, n);
      if (groups::census_to_a_n(census) != coeff[n]) {
        r.passed = false;
        r.detail = name + " a_" + std::to_string(n) + " mismatch";
        return r;
      }
      for (int k = 1; k <= n; ++k) {
        mpz_class expect = 0;
        if (auto it = census.orbit_histogram.find(k); it != census.orbit_histogram.end())
          expect = it->second;
        if (rows[n].A[k] != expect) {
          r.passed = false;
          r.detail = name + " A(" + std::to_string(n) + "," + std::to_string(k) +
                     ") = " + rows[n].A[k].get_str() + ", census says " + expect.get_str();
          return r;
        }
      }
    }
  }
  return r;
}

SuiteResult suite_polymer(const groups::Catalog& cat) {
  SuiteResult r{"polymer", true, ""};
  for (const std::string& name : {"Z2", "Z3", "heis"}) {
    auto coeff = groups::coeffs(cat.get(name), 8);
    auto rows = orbits::orbit_tables(coeff, 8);
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n; ++k)
        if (orbits::polymer_oracle(coeff, n, k) != rows[n].A[k]) {
          r.passed = false;
          r.detail = name + " A(" + std::to_string(n) + "," + std::to_string(k) + ")";
          return r;
        }
  }
  return r;
}

SuiteResult suite_stirling(const groups::Catalog& cat) {
  SuiteResult r{"stirling", true, ""};
  const int n_max = 30;
  auto coeff = groups::coeffs(cat.get("Z1"), n_max);
  auto rows = orbits::orbit_tables(coeff, n_max);
  // unsigned Stirling first kind: c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  std::vector<std::vector<mpz_class>> c(n_max + 1);
  c[0] = {mpz_class(1)};
  for (int n = 1; n <= n_max; ++n) {
    c[n].assign(n + 1, mpz_class(0));
    for (int k = 1; k <= n; ++k)
      c[n][k] = c[n - 1][k - 1] + (k < n ? mpz_class((n - 1) * c[n - 1][k]) : mpz_class(0));
  }
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      if (rows[n].A[k] != c[n][k]) {
        r.passed = false;
        r.detail = "c(" + std::to_string(n) + "," + std::to_string(k) + ") mismatch";
        return r;
      }
  // mean at x=1 is the harmonic number
  auto p = measure::pmf(rows[4], mpq_class(1));
  auto mom = measure::exact_moments(p);
  if (mom.mean_q != mpq_class(25, 12)) {
    r.passed = false;
    r.detail = "harmonic mean H_4 != 25/12";
  }
  return r;
}

int cmd_verify(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  int n_max = cfg.n > 0 ? cfg.n : 4;
  std::vector<SuiteResult> results;
  auto want = [&](const std::string& s) { return cfg.suite == "all" || cfg.suite == s; };
  if (want("dirichlet")) results.push_back(suite_dirichlet());
  if (want("hermite")) results.push_back(suite_hermite(cat));
  if (want("brute")) results.push_back(suite_brute(cat, n_max));
  if (want("polymer")) results.push_back(suite_polymer(cat));
  if (want("stirling")) results.push_back(suite_stirling(cat));
  if (results.empty()) throw std::invalid_argument("unknown suite: " + cfg.suite);

  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL");
    if (!r.passed) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgroup-growth coefficients, orbit-count distributions of "
               "random coverings, and saddle-point diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  RunConfig cfg;
  app.add_option("--catalog", cfg.catalog_path, "group catalog JSON file");
  app.add_option("--cache-dir", cfg.cache_dir, "orbit-row cache directory");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--tol", cfg.tol, "relative tolerance for W evaluations")
      ->check(CLI::Range(1e-15, 1.0));
  app.add_option("--quad-tol", cfg.quad_tol, "quadrature relative tolerance")
      ->check(CLI::Range(1e-15, 1.0));
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--x", cfg.x, "bias parameter; 'p/q' is exact, decimal is floating");

  auto add_group = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--group", cfg.group, "catalog group name");
    if (required) opt->required();
  };

  auto* c_coeffs = app.add_subcommand("coeffs", "subgroup counts a_n(G)");
  add_group(c_coeffs);
  c_coeffs->add_option("--max-n", cfg.max_n, "truncation length")->required();

  auto* c_orbit = app.add_subcommand("orbit-table", "exact orbit-count rows A(G,n,k)");
  add_group(c_orbit);
  c_orbit->add_option("--n", cfg.n, "single n (rows 0..n are emitted)");
  c_orbit->add_option("--max-n", cfg.max_n, "alias for --n");

  auto* c_moments = app.add_subcommand("moments", "biased-measure moments of the orbit count");
  add_group(c_moments);
  c_moments->add_option("--n", cfg.n, "number of sheets")->required();
  c_moments->add_option("--samples", cfg.samples, "also draw this many seeded samples");

  auto* c_predict = app.add_subcommand("predict", "leading-term mean/variance predictions");
  add_group(c_predict);
  c_predict->add_option("--n", cfg.n, "number of sheets")->required();

  auto* c_scan = app.add_subcommand("clt-scan", "exact vs predicted statistics along an n-grid");
  add_group(c_scan);
  c_scan->add_option("--n-grid", cfg.n_grid, "nondecreasing list of n values")
      ->delimiter(',');
  c_scan->add_option("--max-n", cfg.max_n, "coefficient table length override");

  auto* c_saddle = app.add_subcommand("saddle-check", "H = P*J factorization identity check");
  add_group(c_saddle);
  c_saddle->add_option("--n", cfg.n, "number of sheets")->required();
  c_saddle->add_option("--max-n", cfg.max_n, "coefficient table length override");

  auto* c_logcc = app.add_subcommand("logcc", "log-concavity scan of A(G,n,k) rows");
  add_group(c_logcc);
  c_logcc->add_option("--max-n", cfg.max_n, "scan rows up to this n");

  auto* c_verify = app.add_subcommand("verify", "oracle-equivalence suites");
  add_group(c_verify, false);
  c_verify->add_option("--suite", cfg.suite,
                       "all|dirichlet|hermite|brute|polymer|stirling");
  c_verify->add_option("--n", cfg.n, "census depth for the brute suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_coeffs->parsed()) return cmd_coeffs(cfg);
    if (c_orbit->parsed()) return cmd_orbit_table(cfg);
    if (c_moments->parsed()) return cmd_moments(cfg);
    if (c_predict->parsed()) return cmd_predict(cfg);
    if (c_scan->parsed()) return cmd_clt_scan(cfg);
    if (c_saddle->parsed()) return cmd_saddle_check(cfg);
    if (c_logcc->parsed()) return cmd_logcc(cfg);
    if (c_verify->parsed()) return cmd_verify(cfg);
  } catch (const asymptotics::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
