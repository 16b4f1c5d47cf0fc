#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rollsim/error.hpp"
#include "rollsim/loops/loops.hpp"
#include "rollsim/plant/plant_models.hpp"
#include "rollsim/sizing/sizing.hpp"
#include "rollsim/tuning/tuning.hpp"

namespace rollsim::app {

enum class ScenarioKind { size, simulate, tune, poles };

const char* to_string(ScenarioKind k);
ScenarioKind scenario_kind_from_string(std::string_view s);

/// Bad scenario content. path() is the dotted key path, e.g. "sizing.t_final".
class ScenarioError : public InvalidArgument {
 public:
  ScenarioError(std::string path, const std::string& what)
      : InvalidArgument(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class PlantType { roll_drive, power_screw, multibody, custom };

const char* to_string(PlantType t);

struct PlantConfig {
  PlantType type = PlantType::roll_drive;
  RollDriveParams roll;
  PowerScrewParams screw;
  KinematicsMode mode = KinematicsMode::integrated;
  std::vector<double> num;  ///< custom only
  std::vector<double> den;

  [[nodiscard]] TransferFunction transfer_function() const;
  friend bool operator==(const PlantConfig&, const PlantConfig&) = default;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::simulate;
  std::string output_prefix;

  SizingInputs sizing;

  PlantConfig plant;
  PidGains controller;
  SetpointProfile setpoint = SetpointProfile::step(1.0);
  SimConfig sim;
  std::optional<SensorModel> sensor;
  std::optional<FaultSpec> fault;
  std::optional<DetectorConfig> detector;
  std::uint64_t seed = 0;

  /// Tuning options; bounds of gains not listed are pinned to the controller value.
  CostKind cost = CostKind::itae;
  TuneMethod method = TuneMethod::nelder_mead;
  std::array<GainRange, 3> bounds{};
  int grid_points = 5;
  GridScale grid_scale = GridScale::linear;
  int max_evals = 200;
  unsigned jobs = 1;

  /// Unknown keys reported instead of rejected (non-strict mode).
  std::vector<std::string> warnings;

  [[nodiscard]] LoopSpec loop_spec() const;
  [[nodiscard]] TuneSpec tune_spec() const;
};

/// Equality over everything that affects a run (warnings excluded).
bool equivalent(const Scenario& a, const Scenario& b);

struct ParseOptions {
  bool strict = true;
};

/// Parses YAML (or JSON) scenario text. Quantities may carry units
/// ("150 MPa", "5 mm", "1500 rpm"); bare numbers are SI.
Scenario parse_scenario(std::string_view text, const ParseOptions& opts = {});
Scenario load_scenario(const std::string& path, const ParseOptions& opts = {});

/// Strictness from the ROLLSIM_STRICT environment variable ("0" relaxes).
ParseOptions parse_options_from_env();

}  // namespace rollsim::app
