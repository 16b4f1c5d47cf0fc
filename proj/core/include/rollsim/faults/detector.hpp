#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rollsim/lti/time_series.hpp"

namespace rollsim {

struct DetectorConfig {
  double residual_threshold = 1.0;
  double rate_threshold = 0.0;   ///< units/s, 0 = disabled
  int consecutive_required = 1;
  /// When > 0, the mean of the first `window` residual samples is taken as
  /// the baseline and subtracted before thresholding.
  std::size_t window = 0;

  void validate() const;
  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

enum class AlarmKind { threshold, rate };

const char* to_string(AlarmKind k);

struct FaultEvent {
  double detected_t = 0.0;   ///< first sample of the qualifying run
  double confirmed_t = 0.0;  ///< sample at which the run reached consecutive_required
  double end_t = 0.0;        ///< last sample of the (merged) alarm
  AlarmKind kind_hint = AlarmKind::threshold;
  double peak_residual = 0.0;  ///< signed residual of largest magnitude
};

/// Residual alarms on a uniformly sampled residual (measured minus predicted).
///
/// A threshold alarm is a run of at least consecutive_required samples with
/// |r| > residual_threshold; a rate alarm likewise with |Δr|/dt >
/// rate_threshold. Overlapping or adjacent alarms merge into one event.
std::vector<FaultEvent> detect_faults(std::span<const double> residuals, double dt,
                                      const DetectorConfig& cfg, double t0 = 0.0);

std::vector<FaultEvent> detect_faults(const TimeSeries& ts, std::string_view channel,
                                      const DetectorConfig& cfg);

}  // namespace rollsim
