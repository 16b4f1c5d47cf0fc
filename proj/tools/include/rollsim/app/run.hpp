#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rollsim/app/scenario.hpp"

namespace rollsim::app {

inline constexpr const char* kToolName = "rollsim";
const char* tool_version();

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitDiverged = 2 };

/// Command-line overrides applied on top of a parsed scenario.
struct RunOptions {
  std::optional<std::string> out_prefix;
  std::optional<unsigned> jobs;
  std::optional<double> dt;
  std::optional<double> t_end;
};

void apply_overrides(Scenario& sc, const RunOptions& opts);

/// Output file could not be created or written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string json_path;
  std::vector<std::string> csv_paths;
  nlohmann::json report;
};

/// Resolved inputs in scenario form: every default filled in, SI units.
/// Parsing the dump of this block yields an equivalent scenario.
nlohmann::json echo_inputs(const Scenario& sc);

/// Kind-specific results block (no timing, no file output).
struct Computed {
  nlohmann::json results;
  bool diverged = false;
  std::optional<LoopResult> series;  ///< simulate / tune best run
  std::optional<TuneResult> tune;
};
Computed compute(const Scenario& sc);

/// Computes and writes <prefix>.json plus CSV files next to it.
RunOutcome run_scenario(const Scenario& sc);

/// Locale-independent shortest round-trip formatting.
std::string format_number(double v);

/// CSV with columns t, setpoint, y_true, y_measured, error, u.
void write_series_csv(const std::string& path, const TimeSeries& ts);

}  // namespace rollsim::app
