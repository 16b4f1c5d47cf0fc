#pragma once

#include <optional>
#include <string_view>

#include "rollsim/faults/rng.hpp"

namespace rollsim {

/// Monitored quantity. The simulated plants carry no thermal state, so a
/// temperature channel is only labelled and passed through.
enum class SensorChannel { thickness, position, speed, torque, temperature };

const char* to_string(SensorChannel c);
SensorChannel sensor_channel_from_string(std::string_view s);

struct SensorModel {
  SensorChannel channel = SensorChannel::thickness;
  double noise_sigma = 0.0;        ///< Gaussian, output units
  double bias = 0.0;
  double quantization_step = 0.0;  ///< 0 = off
  double sample_dt = 0.0;          ///< 0 = sample on every call

  void validate() const;
  [[nodiscard]] bool ideal() const {
    return noise_sigma == 0.0 && bias == 0.0 && quantization_step == 0.0 && sample_dt == 0.0;
  }
  friend bool operator==(const SensorModel&, const SensorModel&) = default;
};

enum class FaultKind { stuck, bias_jump, drift, dropout };

const char* to_string(FaultKind k);
FaultKind fault_kind_from_string(std::string_view s);

/// Injected sensor fault, active on [onset_t, onset_t + duration).
///
/// stuck and dropout hold the last measurement taken before the fault;
/// bias_jump adds magnitude; drift adds magnitude·(t - onset_t).
struct FaultSpec {
  FaultKind kind = FaultKind::bias_jump;
  double onset_t = 0.0;
  double magnitude = 0.0;
  std::optional<double> duration;

  void validate() const;
  [[nodiscard]] bool active(double t) const;
  friend bool operator==(const FaultSpec&, const FaultSpec&) = default;
};

/// Per-sensor memory threaded through apply_sensor.
struct SensorState {
  RngState rng;
  std::optional<double> last_output;
  double last_sample_t = 0.0;

  friend bool operator==(const SensorState&, const SensorState&) = default;
};

struct Measurement {
  double measured = 0.0;
  SensorState state;
};

/// One reading of true_value at time t.
///
/// Pipeline: true + bias + noise, plus the additive fault term, quantized to
/// the nearest step; held between samples when sample_dt > 0; replaced by
/// the held value while a stuck/dropout fault is active.
Measurement apply_sensor(double true_value, const SensorModel& model,
                         const std::optional<FaultSpec>& fault, double t, SensorState state);

}  // namespace rollsim
