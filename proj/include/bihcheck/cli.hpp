#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bihcheck/hypersurfaces.hpp"
#include "bihcheck/report.hpp"

namespace bihcheck {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Settings shared by the subcommands.
struct RunConfig {
  Tolerances tol;
  std::uint64_t seed = 1;
  /// Geodesic count, length and integration step.
  GeodesicOptions geodesics;
  /// Empty: standard output, or a default file name under BIHCHECK_OUT_DIR.
  std::string out;
  std::string format;
};

/// Output path for a command: `out` as given, made relative to `out_dir` when
/// that is set and `out` is relative; `default_name` under `out_dir` when `out`
/// is empty. Empty result: standard output.
std::string resolve_output(const std::string& out, const std::string& out_dir,
                           const std::string& default_name);

/// Runs `bihcheck <args...>` (args excludes the program name). Reads
/// BIHCHECK_OUT_DIR for the default output directory.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihcheck
