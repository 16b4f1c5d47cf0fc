#include "rollsim/faults/sensor.hpp"

#include <cmath>
#include <string>

#include "rollsim/error.hpp"

namespace rollsim {

const char* to_string(SensorChannel c) {
  switch (c) {
    case SensorChannel::thickness: return "thickness";
    case SensorChannel::position: return "position";
    case SensorChannel::speed: return "speed";
    case SensorChannel::torque: return "torque";
    case SensorChannel::temperature: return "temperature";
  }
  return "thickness";
}

SensorChannel sensor_channel_from_string(std::string_view s) {
  for (auto c : {SensorChannel::thickness, SensorChannel::position, SensorChannel::speed,
                 SensorChannel::torque, SensorChannel::temperature}) {
    if (s == to_string(c)) return c;
  }
  throw InvalidArgument("unknown sensor channel '" + std::string(s) + "'");
}

const char* to_string(FaultKind k) {
  switch (k) {
    case FaultKind::stuck: return "stuck";
    case FaultKind::bias_jump: return "bias_jump";
    case FaultKind::drift: return "drift";
    case FaultKind::dropout: return "dropout";
  }
  return "bias_jump";
}

FaultKind fault_kind_from_string(std::string_view s) {
  for (auto k : {FaultKind::stuck, FaultKind::bias_jump, FaultKind::drift, FaultKind::dropout}) {
    if (s == to_string(k)) return k;
  }
  throw InvalidArgument("unknown fault kind '" + std::string(s) + "'");
}

void SensorModel::validate() const {
  if (!(noise_sigma >= 0.0)) throw InvalidArgument("sensor.noise_sigma must be >= 0");
  if (!(quantization_step >= 0.0)) throw InvalidArgument("sensor.quantization_step must be >= 0");
  if (!(sample_dt >= 0.0)) throw InvalidArgument("sensor.sample_dt must be >= 0");
}

void FaultSpec::validate() const {
  if (!(onset_t >= 0.0)) throw InvalidArgument("fault.onset_t must be >= 0");
  if (duration && !(*duration > 0.0)) throw InvalidArgument("fault.duration must be > 0");
}

bool FaultSpec::active(double t) const {
  if (t < onset_t) return false;
  return !duration || t < onset_t + *duration;
}

Measurement apply_sensor(double true_value, const SensorModel& model,
                         const std::optional<FaultSpec>& fault, double t, SensorState state) {
  const bool faulted = fault && fault->active(t);
  const bool holding = faulted && (fault->kind == FaultKind::stuck || fault->kind == FaultKind::dropout);
  if (holding && state.last_output) return {*state.last_output, state};

  if (model.sample_dt > 0.0 && state.last_output &&
      t - state.last_sample_t < model.sample_dt * (1.0 - 1e-9)) {
    return {*state.last_output, state};
  }

  double value = true_value + model.bias;
  if (model.noise_sigma > 0.0) {
    const auto g = next_gaussian(state.rng);
    value += model.noise_sigma * g.value;
    state.rng = g.state;
  }
  if (faulted) {
    if (fault->kind == FaultKind::bias_jump) value += fault->magnitude;
    if (fault->kind == FaultKind::drift) value += fault->magnitude * (t - fault->onset_t);
  }
  if (model.quantization_step > 0.0) {
    value = std::round(value / model.quantization_step) * model.quantization_step;
  }
  state.last_output = value;
  state.last_sample_t = t;
  return {value, state};
}

}  // namespace rollsim
