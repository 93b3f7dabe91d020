#pragma once

// Batch front end. Every subcommand writes CSV/JSON artifacts plus
// manifest.json into the output directory and returns an exit code:
//   0 ok, 2 validation error, 3 numerical convergence error
//   (GridTooCoarse, QuadratureUnconverged, StepTooLarge), 4 ConventionMismatch.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinon::cli {

enum class Command { spectrum, potential, correspond, susceptibility, dicke, oscillators, dynamics, closed_eq, wk };

Command parse_command(const std::string& name);
const char* to_string(Command command);

struct RunConfig {
  Command command = Command::spectrum;
  std::optional<double> s, b, alpha, beta, omega, big_omega, epsilon, g, d, temperature;
  std::optional<double> theta, phi, t_max, h, b_min, b_max, db;
  std::vector<double> s_list;
  std::optional<int> grid_points, nu, nphi, sector_max, steps;
  std::optional<double> x_max;
  std::string preset = "zeeman";
  std::string out = ".";
  std::uint64_t seed = 1;
  bool plot = false;
};

/// Parses a JSON config object; keys use the flag spellings ("s-list",
/// "grid-points", ...). Unknown keys throw InvalidArgument.
RunConfig config_from_json(const std::string& text);

/// Overlays every field set in `flags` onto `base`.
RunConfig merge(const RunConfig& base, const RunConfig& flags, const std::vector<std::string>& explicit_keys);

/// Canonical JSON of the resolved parameters (recorded in the manifest).
std::string config_to_json(const RunConfig& config);

/// Throws InvalidArgument naming the failing invariant.
void validate(const RunConfig& config);

enum ExitCode : int { kOk = 0, kFailure = 1, kValidation = 2, kConvergence = 3, kConvention = 4 };

/// Runs one command; diagnostics go to `log`.
int run(const RunConfig& config, std::ostream& log);

/// argv front end: flags, --config <json>, SPINON_OUT.
int main_entry(int argc, char** argv);

}  // namespace spinon::cli
