#pragma once

#include <optional>
#include <span>

#include "rollsim/lti/time_series.hpp"

namespace rollsim {

/// Step-response figures of merit. Empty optionals mean "not reached".
struct ResponseMetrics {
  std::optional<double> rise_time_10_90;
  double overshoot_pct = 0.0;
  std::optional<double> settling_time_2pct;
  double steady_state_error = 0.0;
  double final_value = 0.0;
};

/// Metrics of y against a constant setpoint.
///
/// - rise time: interval between the first crossings of 10% and 90% of the
///   setpoint (linear interpolation between samples). Reported only if the
///   response starts below 10%.
/// - overshoot: max(y - setpoint, 0)/|setpoint|·100, measured in the
///   direction of the setpoint.
/// - settling: time after which y stays inside the ±2% band.
/// - steady_state_error: setpoint minus the mean of the final 5% of samples.
///
/// With setpoint == 0 the relative quantities fall back to absolute units:
/// the band is ±0.02, overshoot is max|y|·100 and rise time is not reached.
ResponseMetrics response_metrics(std::span<const double> t, std::span<const double> y,
                                 double setpoint);

ResponseMetrics response_metrics(const TimeSeries& ts, double setpoint,
                                 std::string_view channel = "y");

}  // namespace rollsim
