#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bihcheck/cli.hpp"
#include "json.hpp"

using namespace bihcheck;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("verify reports a passing case") {
  const Run r = run({"verify", "clifford-torus:1,1", "--count", "8"});
  CHECK(r.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["case"] == "clifford-torus:1,1");
  for (const auto& check : j["reports"][0]["checks"]) {
    CHECK(check.contains("max_residual"));
    CHECK(check.contains("tolerance"));
  }
  CHECK(j["reports"][0]["meta"]["seed"] == 1);
}

TEST_CASE("negative controls pass when their residuals are clearly nonzero") {
  const Run r = run({"verify", "round-cylinder:r=1", "--count", "8"});
  CHECK(r.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  bool saw_exceed = false;
  for (const auto& check : j["reports"][0]["checks"])
    if (check["name"] == "tb_geodesic") {
      CHECK(check["expected"] == "exceed");
      CHECK(check["max_residual"].get<double>() >= 0.1);
      saw_exceed = true;
    }
  CHECK(saw_exceed);
}

TEST_CASE("numerical mismatches exit 1 and name the check") {
  // A threshold above the control's residual leaves it indeterminate.
  const Run r = run({"verify", "round-cylinder:r=1", "--count", "4", "--tol", "failure_threshold=100"});
  CHECK(r.code == kExitMismatch);
  CHECK(r.err.find("round-cylinder:r=1: check tb_geodesic failed") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out)["pass"] == false);

  const Run tight = run({"verify", "tb-cylinder:rho=4", "--count", "4", "--tol", "principal=1e-30"});
  CHECK(tight.code == kExitMismatch);
  CHECK(tight.err.find("check principal failed") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"verify", "no-such-case:1"}).code == kExitUsage);
  CHECK(run({"verify", "clifford-torus:1,1", "--tol", "nonsense=1"}).code == kExitUsage);
  CHECK(run({"verify", "clifford-torus:1,1", "--tol", "biharmonic=-1"}).code == kExitUsage);
  CHECK(run({"verify", "clifford-torus:1,1", "--tol", "biharmonic"}).code == kExitUsage);
  CHECK(run({"verify", "clifford-torus:1,1", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "clifford-torus:1,1", "--step", "0"}).code == kExitUsage);
  CHECK(run({"geodesics", "nope"}).code == kExitUsage);
  CHECK(run({"scan-quartic", "--a", "1"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("scan-quartic examples") {
  const Run flat = run({"scan-quartic", "--a", "1", "--b", "0"});
  CHECK(flat.code == kExitOk);
  const auto rows = csv_rows(flat.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"mu", "r2_minus", "r2_plus", "minus_admissible", "plus_admissible"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i][1]) - (3 - 2 * std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(std::stod(rows[i][2]) - (3 + 2 * std::sqrt(2.0))) < 1e-12);
    CHECK(rows[i][3] == "true");
    CHECK(rows[i][4] == "true");
  }
  CHECK(flat.out.find("# verdict: mu-independent") != std::string::npos);

  const Run berger = run({"scan-quartic", "--a", "1", "--b", "1", "--mu", "0,0.5,1"});
  CHECK(berger.code == kExitOk);
  CHECK(berger.out.find("# verdict: mu-dependent") != std::string::npos);
  CHECK(csv_rows(berger.out).size() == 4);

  const Run space_form = run({"scan-quartic", "--a", "1", "--b", "2", "--mu", "0"});
  CHECK(space_form.code == kExitUsage);
  CHECK(space_form.err.find("space form") != std::string::npos);

  const Run json = run({"scan-quartic", "--a", "1", "--b", "0", "--mu", "0", "--format", "json"});
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["verdict"] == "mu-independent");
  CHECK(j["rows"][0]["roots"].size() == 2);
}

TEST_CASE("geodesics examples") {
  const Run tb = run({"geodesics", "tb-cylinder:rho=4", "--count", "64"});
  CHECK(tb.code == kExitOk);
  const auto rows = csv_rows(tb.out);
  REQUIRE(rows.size() == 65);
  CHECK(rows[0].back() == "verdict");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].back() == "pass");
    for (int k = 3; k <= 6; ++k) CHECK(std::stod(rows[i][k]) < 1e-5);
  }

  const Run eq = run({"geodesics", "equator:n=3", "--count", "6"});
  for (const auto& row : csv_rows(eq.out))
    if (row[0] != "id") CHECK((row.back() == "vacuous" || row.back() == "skipped"));

  const Run control = run({"geodesics", "hopf:a=1,b=0,r=2", "--count", "6"});
  for (const auto& row : csv_rows(control.out))
    if (row[0] != "id") CHECK(row.back() == "fail");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "hopf:a=1,b=1,r=0.5", "--seed", "7", "--count", "6"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Run g1 = run({"geodesics", "clifford-torus:1,2", "--seed", "3", "--count", "5"});
  const Run g2 = run({"geodesics", "clifford-torus:1,2", "--seed", "3", "--count", "5"});
  CHECK(g1.out == g2.out);
  const Run g3 = run({"geodesics", "clifford-torus:1,2", "--seed", "4", "--count", "5"});
  CHECK(g1.out != g3.out);
}

TEST_CASE("output paths") {
  CHECK(resolve_output("", "", "verify.json").empty());
  CHECK(resolve_output("", "/tmp/x", "verify.json") == "/tmp/x/verify.json");
  CHECK(resolve_output("r.json", "/tmp/x", "verify.json") == "/tmp/x/r.json");
  CHECK(resolve_output("/abs/r.json", "/tmp/x", "verify.json") == "/abs/r.json");
  CHECK(resolve_output("r.json", "", "verify.json") == "r.json");

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bihcheck-cli-test";
  fs::create_directories(dir);
  const fs::path file = dir / "scan.csv";
  fs::remove(file);
  const Run r = run({"scan-quartic", "--a", "1", "--b", "0", "--mu", "0", "--out", file.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().find("# verdict: mu-independent") != std::string::npos);

  ::setenv("BIHCHECK_OUT_DIR", dir.string().c_str(), 1);
  fs::remove(dir / "scan-quartic.csv");
  const Run env = run({"scan-quartic", "--a", "1", "--b", "0", "--mu", "0"});
  ::unsetenv("BIHCHECK_OUT_DIR");
  CHECK(env.out.empty());
  CHECK(fs::exists(dir / "scan-quartic.csv"));

  const Run bad = run({"scan-quartic", "--a", "1", "--b", "0", "--out", (dir / "missing" / "x.csv").string()});
  CHECK(bad.code == kExitUsage);
  fs::remove_all(dir);
}
