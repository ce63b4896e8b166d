#include "bihcheck/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "bihcheck/catalog.hpp"
#include "bihcheck/errors.hpp"
#include "bihcheck/helices.hpp"

namespace bihcheck {

namespace {

/// Shortest text that reads back to the same double.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string join(const Vec& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) out += (i ? ";" : "") + fmt(v(i));
  return out;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void apply_tolerances(RunConfig& config, const std::vector<std::string>& overrides) {
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got " + item);
    const std::string name = item.substr(0, eq);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--tol value is not a number: " + item);
    }
    if (!config.tol.set(name, value))
      throw UsageError("--tol: unknown check '" + name + "' or non-positive value");
  }
}

/// Writes `content` to the resolved path or to `out`.
int emit(const std::string& content, const RunConfig& config, const std::string& default_name,
         std::ostream& out, std::ostream& err) {
  const char* dir = std::getenv("BIHCHECK_OUT_DIR");
  const std::string path = resolve_output(config.out, dir ? dir : "", default_name);
  if (path.empty()) {
    out << content;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_verify(const std::string& selector, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> names;
  if (selector == "all") {
    names = registry_names();
  } else {
    names.push_back(selector);
  }
  std::vector<CatalogCase> cases;
  try {
    for (const std::string& n : names) cases.push_back(make_case(n));
  } catch (const UnknownCase& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::sort(cases.begin(), cases.end(),
            [](const CatalogCase& a, const CatalogCase& b) { return a.name < b.name; });

  VerifyOptions options;
  options.tol = config.tol;
  options.seed = config.seed;
  options.geodesics = config.geodesics;

  std::vector<VerificationReport> reports;
  bool all_pass = true;
  for (const CatalogCase& c : cases) {
    try {
      reports.push_back(verify_case(c, options));
    } catch (const std::exception& e) {
      err << c.name << ": evaluation failed: " << e.what() << "\n";
      return kExitMismatch;
    }
    const VerificationReport& r = reports.back();
    for (const CheckResult& check : r.checks)
      if (!check.pass()) {
        all_pass = false;
        err << r.case_name << ": check " << check.name << " failed: residual " << fmt(check.max_residual)
            << ", tolerance " << fmt(check.tolerance) << ", expected " << to_string(check.expected)
            << ", measured " << to_string(check.measured()) << "\n";
      }
  }

  std::string content;
  if (config.format == "csv") {
    std::ostringstream os;
    os << "case,check,max_residual,tolerance,expected,measured,pass\n";
    for (const VerificationReport& r : reports)
      for (const CheckResult& c : r.checks)
        os << r.case_name << "," << c.name << "," << fmt(c.max_residual) << "," << fmt(c.tolerance) << ","
           << to_string(c.expected) << "," << to_string(c.measured()) << "," << (c.pass() ? "true" : "false")
           << "\n";
    content = os.str();
  } else {
    nlohmann::json j;
    j["pass"] = all_pass;
    j["seed"] = config.seed;
    j["reports"] = nlohmann::json::array();
    for (const VerificationReport& r : reports) j["reports"].push_back(r.to_json());
    content = j.dump(2) + "\n";
  }
  const int written = emit(content, config, config.format == "csv" ? "verify.csv" : "verify.json", out, err);
  if (written != kExitOk) return written;
  return all_pass ? kExitOk : kExitMismatch;
}

struct ScanRow {
  double mu;
  RadiusQuartic quartic;
};

std::string scan_verdict(const std::vector<ScanRow>& rows) {
  bool any = false;
  const std::vector<double> first = rows.front().quartic.admissible();
  bool same = true;
  for (const ScanRow& row : rows) {
    const std::vector<double> roots = row.quartic.admissible();
    any = any || !roots.empty();
    if (roots.size() != first.size()) {
      same = false;
      continue;
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (std::abs(roots[i] - first[i]) > 1e-9 * std::max(1.0, std::abs(first[i]))) same = false;
  }
  if (!any) return "no admissible roots";
  return same ? "mu-independent" : "mu-dependent";
}

int cmd_scan_quartic(double a, double b, std::vector<double> mus, const RunConfig& config,
                     std::ostream& out, std::ostream& err) {
  if (std::abs(4.0 * a - b * b) < 1e-12) {
    err << "warning: 4a = b^2, N(a,b) is a space form; scan refused\n";
    return kExitUsage;
  }
  if (mus.empty())
    for (int i = 0; i <= 10; ++i) mus.push_back(i / 10.0);
  std::vector<ScanRow> rows;
  for (double mu : mus) rows.push_back({mu, tb_radius_quartic(a, b, mu)});
  const std::string verdict = scan_verdict(rows);

  std::ostringstream os;
  if (config.format == "json") {
    nlohmann::json j;
    j["a"] = a;
    j["b"] = b;
    j["verdict"] = verdict;
    j["rows"] = nlohmann::json::array();
    for (const ScanRow& row : rows) {
      nlohmann::json r;
      r["mu"] = row.mu;
      r["degenerate"] = row.quartic.degenerate;
      r["roots"] = nlohmann::json::array();
      for (const QuarticRoot& q : row.quartic.roots) {
        nlohmann::json root{{"r2", q.r2}, {"admissible", q.admissible}};
        if (!q.reason.empty()) root["reason"] = q.reason;
        r["roots"].push_back(root);
      }
      j["rows"].push_back(r);
    }
    os << j.dump(2) << "\n";
  } else {
    os << "mu,r2_minus,r2_plus,minus_admissible,plus_admissible\n";
    for (const ScanRow& row : rows) {
      const auto& roots = row.quartic.roots;
      auto value = [&](std::size_t i) { return i < roots.size() ? fmt(roots[i].r2) : std::string(); };
      auto flag = [&](std::size_t i) {
        return i < roots.size() ? std::string(roots[i].admissible ? "true" : "false") : std::string();
      };
      os << fmt(row.mu) << "," << value(0) << "," << value(1) << "," << flag(0) << "," << flag(1) << "\n";
    }
    os << "# verdict: " << verdict << "\n";
  }
  return emit(os.str(), config, config.format == "json" ? "scan-quartic.json" : "scan-quartic.csv", out, err);
}

int cmd_geodesics(const std::string& selector, const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  CatalogCase c;
  try {
    c = make_case(selector);
  } catch (const UnknownCase& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  GeodesicOptions options = config.geodesics;
  options.seed = config.seed;
  std::vector<GeodesicSampleResult> results;
  try {
    results = sample_geodesics(*c.immersion, options);
  } catch (const std::exception& e) {
    err << c.name << ": evaluation failed: " << e.what() << "\n";
    return kExitMismatch;
  }
  auto verdict = [&](const GeodesicSampleResult& r) -> std::string {
    if (r.skipped) return "skipped";
    if (r.vacuous) return "vacuous";
    return r.max_residual() < config.tol.tb_geodesic ? "pass" : "fail";
  };

  std::ostringstream os;
  if (config.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const GeodesicSampleResult& r : results) {
      nlohmann::json item = to_json(r);
      item["verdict"] = verdict(r);
      j.push_back(item);
    }
    nlohmann::json top{{"case", c.name}, {"seed", options.seed}, {"length", options.length},
                       {"step", options.step}, {"geodesics", j}};
    os << top.dump(2) << "\n";
  } else {
    os << "id,u0,dir0,max_kappa_deviation,max_normal,max_binormal,max_off_frame,verdict\n";
    for (const GeodesicSampleResult& r : results) {
      os << r.id << "," << join(r.u0) << "," << join(r.dir0) << ",";
      if (r.skipped)
        os << ",,,,";
      else
        os << fmt(r.max_tangent) << "," << fmt(r.max_normal) << "," << fmt(r.max_binormal) << ","
           << fmt(r.max_off_frame) << ",";
      os << verdict(r) << "\n";
    }
  }
  return emit(os.str(), config, config.format == "json" ? "geodesics.json" : "geodesics.csv", out, err);
}

}  // namespace

std::string resolve_output(const std::string& out, const std::string& out_dir,
                           const std::string& default_name) {
  namespace fs = std::filesystem;
  if (out.empty()) return out_dir.empty() ? std::string() : (fs::path(out_dir) / default_name).string();
  if (out_dir.empty() || fs::path(out).is_absolute()) return out;
  return (fs::path(out_dir) / out).string();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for biharmonic and totally biharmonic hypersurfaces", "bihcheck"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> tol_overrides;
  std::string verify_format = "json", scan_format = "csv", geodesics_format = "csv";
  auto common = [&](CLI::App* sub, std::string& format) {
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--tol", tol_overrides, "tolerance override name=value (repeatable)");
    sub->add_option("--out", config.out, "output file (default: standard output)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto geodesic_options = [&](CLI::App* sub) {
    sub->add_option("--count", config.geodesics.count, "number of geodesics")->check(CLI::PositiveNumber);
    sub->add_option("--length", config.geodesics.length, "geodesic length")->check(CLI::PositiveNumber);
    sub->add_option("--step", config.geodesics.step, "geodesic integration step")->check(CLI::PositiveNumber);
  };

  std::string selector;
  CLI::App* verify = app.add_subcommand("verify", "verify a catalog case, or all of them");
  verify->add_option("case", selector, "case name or 'all'")->required();
  geodesic_options(verify);
  common(verify, verify_format);

  double qa = 0.0, qb = 0.0;
  std::vector<double> mus;
  CLI::App* scan = app.add_subcommand("scan-quartic", "tabulate radius-equation roots over mu");
  scan->add_option("--a", qa, "BCV parameter a")->required();
  scan->add_option("--b", qb, "BCV parameter b")->required();
  scan->add_option("--mu", mus, "mu values (default 0, 0.1, ..., 1)")->delimiter(',');
  common(scan, scan_format);

  std::string geo_selector;
  CLI::App* geodesics = app.add_subcommand("geodesics", "per-geodesic biharmonic residuals of a case");
  geodesics->add_option("case", geo_selector, "case name")->required();
  geodesic_options(geodesics);
  common(geodesics, geodesics_format);

  std::vector<std::string> argv_storage{"bihcheck"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_tolerances(config, tol_overrides);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (verify->parsed()) {
    config.format = verify_format;
    return cmd_verify(selector, config, out, err);
  }
  if (scan->parsed()) {
    config.format = scan_format;
    return cmd_scan_quartic(qa, qb, mus, config, out, err);
  }
  config.format = geodesics_format;
  return cmd_geodesics(geo_selector, config, out, err);
}

}  // namespace bihcheck
