#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "rollsim/lti/state_space.hpp"
#include "rollsim/lti/time_series.hpp"
#include "rollsim/lti/transfer_function.hpp"

namespace rollsim {

enum class Integrator { rk4, euler };

const char* to_string(Integrator i);
Integrator integrator_from_string(std::string_view s);

struct SimConfig {
  double dt = 1e-3;
  double t_end = 20.0;
  Integrator integrator = Integrator::rk4;
  /// A state or output magnitude above this bound (or a non-finite value)
  /// stops the run and records the divergence time.
  double divergence_limit = 1e12;

  /// Throws InvalidArgument unless dt > 0, t_end >= dt and the limit is positive.
  void validate() const;
  /// Number of integration steps; the series holds steps() + 1 samples.
  [[nodiscard]] std::size_t steps() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

using InputSignal = std::function<double(double)>;

/// Advances x by one step of length h from time t. The input is evaluated at
/// the integrator's stage times.
void integrate_step(const StateSpaceModel& ss, Eigen::VectorXd& x, const InputSignal& u,
                    double t, double h, Integrator method);

/// Same, with u held constant over the step (zero-order hold).
void integrate_step_held(const StateSpaceModel& ss, Eigen::VectorXd& x, double u, double h,
                         Integrator method);

/// Fixed-step simulation from a zero initial state. Channels "u" and "y".
/// On divergence the series is truncated and diverged_at is set.
TimeSeries simulate_lti(const StateSpaceModel& ss, const InputSignal& input,
                        const SimConfig& cfg);

TimeSeries step_response(const TransferFunction& tf, const SimConfig& cfg);

enum class Boundedness { bounded, growing };

const char* to_string(Boundedness b);

/// Time-domain boundedness over the simulated horizon.
///
/// growing when the run diverged, or when the peak magnitude over the second
/// half of the samples exceeds 10x the peak over the first half.
Boundedness classify_boundedness(std::span<const double> y, bool diverged);

}  // namespace rollsim
