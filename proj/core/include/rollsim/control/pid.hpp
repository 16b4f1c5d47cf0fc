#pragma once

#include <optional>
#include <utility>

#include "rollsim/lti/polynomial.hpp"
#include "rollsim/lti/transfer_function.hpp"

namespace rollsim {

/// PID gains acting on the error e = setpoint - measurement.
///
/// n is the derivative filter pole (rad/s): the continuous derivative term is
/// kd·s·n/(s + n). In the stepped controller n = 0 means an unfiltered first
/// difference; the transfer-function form needs n > 0 whenever kd > 0.
struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double n = 0.0;
  std::optional<double> output_min;
  std::optional<double> output_max;

  void validate() const;
  [[nodiscard]] bool saturates() const { return output_min || output_max; }

  friend bool operator==(const PidGains&, const PidGains&) = default;
};

/// Default derivative filter pole used when a transfer function is needed.
inline constexpr double kDefaultDerivativeFilter = 100.0;

struct PidState {
  double integral = 0.0;         ///< accumulated error·s
  double prev_error = 0.0;
  double prev_derivative = 0.0;  ///< filtered derivative memory

  void reset() { *this = PidState{}; }
  friend bool operator==(const PidState&, const PidState&) = default;
};

struct PidStep {
  double output = 0.0;
  PidState state;
};

/// One controller update.
///
/// Trapezoidal integral, backward-Euler filtered first-difference derivative,
/// output clamping when limits are set. Anti-windup by conditional
/// integration: the integral is frozen while the output is saturated in the
/// direction of the error, and ki·integral is kept inside the output limits.
/// The integral only accumulates while ki > 0 and the derivative memory only
/// updates while kd > 0.
PidStep pid_step(const PidState& state, double error, double dt, const PidGains& gains);

/// C(s) = kp + ki/s + kd·s·n/(s + n) as one proper rational function.
///
/// Terms with zero gain are left out so no pole/zero pair is introduced at the
/// origin (kp alone gives the constant kp). Throws InvalidArgument when kd > 0
/// and n <= 0.
TransferFunction pid_tf(const PidGains& gains);

/// Numerator/denominator of the ideal (unfiltered) PID, which is improper
/// when kd > 0: (kd s² + kp s + ki)/s. Used for characteristic polynomials.
std::pair<Polynomial, Polynomial> pid_ideal_polynomials(const PidGains& gains);

}  // namespace rollsim
