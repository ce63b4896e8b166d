#include "bihcheck/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace bihcheck {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Vanish:
      return "vanish";
    case Expectation::Exceed:
      return "exceed";
    case Expectation::Informational:
      break;
  }
  return "informational";
}

std::string to_string(Measured m) {
  switch (m) {
    case Measured::Vanishes:
      return "vanishes";
    case Measured::Exceeds:
      return "exceeds";
    case Measured::Indeterminate:
      break;
  }
  return "indeterminate";
}

Measured CheckResult::measured() const {
  if (max_residual < tolerance) return Measured::Vanishes;
  if (max_residual >= threshold) return Measured::Exceeds;
  return Measured::Indeterminate;
}

bool CheckResult::pass() const {
  const Measured m = measured();
  switch (expected) {
    case Expectation::Vanish:
      return m == Measured::Vanishes;
    case Expectation::Exceed:
      return m == Measured::Exceeds;
    case Expectation::Informational:
      break;
  }
  return true;
}

CheckResult& VerificationReport::add(const std::string& name, double max_residual,
                                     double tolerance, const std::string& note) {
  CheckResult c;
  c.name = name;
  c.max_residual = max_residual;
  c.tolerance = tolerance;
  c.note = note;
  checks.push_back(c);
  return checks.back();
}

CheckResult& VerificationReport::check(const std::string& name) {
  for (CheckResult& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::expect(const std::string& name, Expectation e) { check(name).expected = e; }

void VerificationReport::merge(const VerificationReport& other, const std::string& key) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  if (!other.meta.empty()) meta[key] = other.meta;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const CheckResult& c : checks)
    if (!c.pass()) out.push_back(c.name);
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["case"] = case_name;
  j["pass"] = pass();
  nlohmann::json list = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json item;
    item["name"] = c.name;
    item["max_residual"] = c.max_residual;
    item["tolerance"] = c.tolerance;
    item["expected"] = to_string(c.expected);
    if (c.expected == Expectation::Exceed) item["threshold"] = c.threshold;
    item["measured"] = to_string(c.measured());
    item["pass"] = c.pass();
    if (!c.note.empty()) item["note"] = c.note;
    list.push_back(item);
  }
  j["checks"] = list;
  j["meta"] = meta;
  return j;
}

bool Tolerances::set(const std::string& name, double value) {
  if (!(value > 0.0)) return false;
  double* slot = nullptr;
  if (name == "biharmonic") slot = &biharmonic;
  else if (name == "biminimal") slot = &biminimal;
  else if (name == "tb_pointwise") slot = &tb_pointwise;
  else if (name == "tb_geodesic") slot = &tb_geodesic;
  else if (name == "principal") slot = &principal;
  else if (name == "hopf_kappa_g") slot = &hopf_kappa_g;
  else if (name == "extrinsic_gaussian") slot = &extrinsic_gaussian;
  else if (name == "curve_system") slot = &curve_system;
  else if (name == "failure_threshold") slot = &failure_threshold;
  if (!slot) return false;
  *slot = value;
  return true;
}

std::vector<std::string> Tolerances::names() {
  return {"biharmonic",   "biminimal",          "tb_pointwise", "tb_geodesic",      "principal",
          "hopf_kappa_g", "extrinsic_gaussian", "curve_system", "failure_threshold"};
}

}  // namespace bihcheck
