#include "rollsim/control/pid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rollsim/error.hpp"

namespace rollsim {

void PidGains::validate() const {
  if (!(kp >= 0.0) || !(ki >= 0.0) || !(kd >= 0.0)) {
    throw InvalidArgument("controller gains kp, ki, kd must be >= 0");
  }
  if (!(n >= 0.0)) throw InvalidArgument("controller.n must be >= 0");
  if (output_min && output_max && !(*output_min < *output_max)) {
    throw InvalidArgument("controller.umin must be < controller.umax");
  }
}

PidStep pid_step(const PidState& state, double error, double dt, const PidGains& gains) {
  if (!(dt > 0.0)) throw InvalidArgument("pid_step: dt must be > 0");
  if (!std::isfinite(error)) throw InvalidArgument("pid_step: error is not finite");

  PidState next = state;
  next.prev_error = error;

  double derivative = 0.0;
  if (gains.kd > 0.0) {
    const double raw = (error - state.prev_error) / dt;
    derivative = gains.n > 0.0
                     ? (state.prev_derivative + gains.n * dt * raw) / (1.0 + gains.n * dt)
                     : raw;
    next.prev_derivative = derivative;
  }

  const double lo = gains.output_min.value_or(-std::numeric_limits<double>::infinity());
  const double hi = gains.output_max.value_or(std::numeric_limits<double>::infinity());
  const double pd = gains.kp * error + gains.kd * derivative;

  if (gains.ki > 0.0) {
    double candidate = state.integral + 0.5 * (error + state.prev_error) * dt;
    const double unsat = pd + gains.ki * candidate;
    const bool pushing_high = unsat > hi && error > 0.0;
    const bool pushing_low = unsat < lo && error < 0.0;
    if (pushing_high || pushing_low) candidate = state.integral;
    // Keep the integral term itself inside the actuator range.
    candidate = std::clamp(candidate, lo / gains.ki, hi / gains.ki);
    next.integral = candidate;
  }

  const double output = std::clamp(pd + gains.ki * next.integral, lo, hi);
  return {output, next};
}

TransferFunction pid_tf(const PidGains& gains) {
  const double kp = gains.kp;
  const double ki = gains.ki;
  const double kd = gains.kd;
  if (kd > 0.0 && !(gains.n > 0.0)) {
    throw InvalidArgument("pid_tf: derivative term needs a filter pole n > 0 (ideal PID is improper)");
  }
  const double n = gains.n;
  if (kd == 0.0) {
    if (ki == 0.0) return TransferFunction(Polynomial{kp}, Polynomial{1.0});
    return TransferFunction(Polynomial{kp, ki}, Polynomial{1.0, 0.0});
  }
  if (ki == 0.0) {
    // kp + kd n s/(s+n) = ((kp + kd n) s + kp n)/(s + n)
    return TransferFunction(Polynomial{kp + kd * n, kp * n}, Polynomial{1.0, n});
  }
  // Over s(s+n): (kp + kd n) s² + (kp n + ki) s + ki n
  return TransferFunction(Polynomial{kp + kd * n, kp * n + ki, ki * n}, Polynomial{1.0, n, 0.0});
}

std::pair<Polynomial, Polynomial> pid_ideal_polynomials(const PidGains& gains) {
  if (gains.ki == 0.0) return {Polynomial{gains.kd, gains.kp}, Polynomial{1.0}};
  return {Polynomial{gains.kd, gains.kp, gains.ki}, Polynomial{1.0, 0.0}};
}

}  // namespace rollsim
