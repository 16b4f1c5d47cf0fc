#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "rollsim/control/pid.hpp"
#include "rollsim/faults/detector.hpp"
#include "rollsim/faults/sensor.hpp"
#include "rollsim/lti/metrics.hpp"
#include "rollsim/lti/routh.hpp"
#include "rollsim/lti/simulate.hpp"
#include "rollsim/loops/setpoint.hpp"
#include "rollsim/plant/plant_models.hpp"

namespace rollsim {

/// Unity negative feedback loop: PID -> plant, plant output measured through
/// an optional sensor model with an optional injected fault.
struct LoopSpec {
  TransferFunction plant{Polynomial{1.0}, Polynomial{1.0, 1.0}};
  PidGains gains;
  SetpointProfile setpoint;
  std::optional<SensorModel> sensor;
  std::optional<FaultSpec> fault;
  std::optional<DetectorConfig> detector;
  std::uint64_t seed = 0;
  SimConfig sim;

  void validate() const;
  /// True when the loop is linear time-invariant: ideal sensing, no fault,
  /// no saturation.
  [[nodiscard]] bool linear() const;
};

enum class StabilityVerdict { poles_stable, poles_unstable, poles_marginal };

const char* to_string(StabilityVerdict v);

/// stable when max Re < -1e-9, unstable when > 1e-9, marginal otherwise.
StabilityVerdict classify_poles(const std::vector<std::complex<double>>& poles);

struct LoopResult {
  /// Channels: setpoint, y_true, y_measured, error, u.
  TimeSeries series;
  ResponseMetrics metrics;
  double final_setpoint = 0.0;
  /// Closed-loop pole verdict; present only for linear loops.
  std::optional<StabilityVerdict> stability_verdict;
  std::vector<std::complex<double>> closed_loop_poles;
  std::optional<Polynomial> characteristic;
  std::optional<double> diverged_at;
  /// Detector output on the residual y_measured - y_true.
  std::vector<FaultEvent> fault_events;

  [[nodiscard]] bool diverged() const { return diverged_at.has_value(); }
};

/// Controller numerator/denominator used for pole analysis: the filtered
/// form when n > 0 (or kd == 0), the ideal improper form otherwise.
std::pair<Polynomial, Polynomial> controller_polynomials(const PidGains& gains);

/// Discrete co-simulation of spec.
///
/// Each step evaluates the setpoint, measures the plant output through the
/// sensor path, runs pid_step on the error and integrates the plant over dt
/// with that control held constant. Plants with direct feedthrough see the
/// previous step's control in their output. Metrics use y_true against the
/// setpoint value at t_end.
LoopResult simulate_loop(const LoopSpec& spec);

LoopResult speed_loop(const RollDriveParams& p, const PidGains& gains,
                      const SetpointProfile& setpoint, const SimConfig& sim);

LoopResult thickness_loop(const PowerScrewParams& p, KinematicsMode mode, const PidGains& gains,
                          const SetpointProfile& setpoint, const SimConfig& sim);

/// Open- and closed-loop study of the fixed multibody plant.
struct MultibodyDemo {
  TimeSeries open_loop;  ///< unit step response, channels u, y
  RouthClass open_routh = RouthClass::not_hurwitz;
  StabilityVerdict open_verdict = StabilityVerdict::poles_unstable;
  Boundedness open_boundedness = Boundedness::bounded;
  std::vector<std::complex<double>> open_poles;

  LoopResult ideal;      ///< unfiltered derivative (n = 0)
  Boundedness ideal_boundedness = Boundedness::bounded;
  RouthClass ideal_routh = RouthClass::not_hurwitz;
  LoopResult filtered;   ///< derivative filter n (default 100)
  Boundedness filtered_boundedness = Boundedness::bounded;
  RouthClass filtered_routh = RouthClass::not_hurwitz;

  /// Pole verdicts and time-domain boundedness agree for all three cases.
  [[nodiscard]] bool consistent() const;
};

/// Unit step study with the given gains. gains.n selects the filter pole for
/// the filtered run; 0 there means the default of 100.
MultibodyDemo multibody_demo(const PidGains& gains, const SimConfig& sim);

/// Whether a verdict agrees with a time-domain boundedness classification.
/// Marginal verdicts agree with either outcome.
bool verdict_matches(StabilityVerdict v, Boundedness b);

}  // namespace rollsim
