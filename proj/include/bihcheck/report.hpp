#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace bihcheck {

/// What a check is supposed to show: a residual that vanishes, or one that is
/// clearly nonzero (negative controls). Informational checks never fail.
enum class Expectation { Vanish, Exceed, Informational };

enum class Measured { Vanishes, Exceeds, Indeterminate };

std::string to_string(Expectation e);
std::string to_string(Measured m);

/// Residual below `tolerance` vanishes; at or above `threshold` it exceeds.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  double threshold = 0.1;
  Expectation expected = Expectation::Vanish;
  std::string note;

  Measured measured() const;
  bool pass() const;
};

struct VerificationReport {
  std::string case_name;
  std::vector<CheckResult> checks;
  /// Free-form metadata: seed, sample counts, steps, orientation, ...
  nlohmann::json meta = nlohmann::json::object();

  CheckResult& add(const std::string& name, double max_residual, double tolerance,
                   const std::string& note = {});
  /// Throws std::out_of_range for an unknown check.
  CheckResult& check(const std::string& name);
  const CheckResult* find(const std::string& name) const;
  void expect(const std::string& name, Expectation e);

  /// Appends the other report's checks; its metadata goes under meta[key].
  void merge(const VerificationReport& other, const std::string& key);

  bool pass() const;
  /// Names of checks that do not meet their expectation.
  std::vector<std::string> failures() const;

  nlohmann::json to_json() const;
};

/// Default tolerance per check family. Names are the ones accepted by
/// `set` and the command line `--tol name=value`.
struct Tolerances {
  double biharmonic = 1e-6;
  double biminimal = 1e-6;
  double tb_pointwise = 1e-6;
  double tb_geodesic = 1e-5;
  double principal = 1e-6;
  double hopf_kappa_g = 1e-5;
  double extrinsic_gaussian = 1e-6;
  double curve_system = 1e-6;
  /// A residual at or above this is "clearly nonzero".
  double failure_threshold = 0.1;

  /// False for an unknown name or a non-positive value.
  bool set(const std::string& name, double value);
  static std::vector<std::string> names();
};

}  // namespace bihcheck
