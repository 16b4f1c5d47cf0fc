#include "rollsim/loops/loops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rollsim/control/closed_loop.hpp"
#include "rollsim/error.hpp"
#include "rollsim/lti/roots.hpp"
#include "rollsim/lti/state_space.hpp"

namespace rollsim {
namespace {

constexpr double kMarginalBand = 1e-9;

bool finite_within(const Eigen::VectorXd& x, double limit) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x(i)) || std::abs(x(i)) > limit) return false;
  }
  return true;
}

}  // namespace

void LoopSpec::validate() const {
  gains.validate();
  sim.validate();
  if (sensor) sensor->validate();
  if (fault) fault->validate();
  if (detector) detector->validate();
}

bool LoopSpec::linear() const {
  return (!sensor || sensor->ideal()) && !fault && !gains.saturates();
}

const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::poles_stable: return "poles_stable";
    case StabilityVerdict::poles_unstable: return "poles_unstable";
    case StabilityVerdict::poles_marginal: return "poles_marginal";
  }
  return "poles_marginal";
}

StabilityVerdict classify_poles(const std::vector<std::complex<double>>& poles) {
  double max_re = -std::numeric_limits<double>::infinity();
  for (const auto& p : poles) max_re = std::max(max_re, p.real());
  if (poles.empty() || max_re < -kMarginalBand) return StabilityVerdict::poles_stable;
  if (max_re > kMarginalBand) return StabilityVerdict::poles_unstable;
  return StabilityVerdict::poles_marginal;
}

bool verdict_matches(StabilityVerdict v, Boundedness b) {
  switch (v) {
    case StabilityVerdict::poles_stable: return b == Boundedness::bounded;
    case StabilityVerdict::poles_unstable: return b == Boundedness::growing;
    case StabilityVerdict::poles_marginal: return true;
  }
  return false;
}

std::pair<Polynomial, Polynomial> controller_polynomials(const PidGains& gains) {
  if (gains.kd > 0.0 && !(gains.n > 0.0)) return pid_ideal_polynomials(gains);
  const TransferFunction c = pid_tf(gains);
  return {c.num(), c.den()};
}

LoopResult simulate_loop(const LoopSpec& spec) {
  spec.validate();
  const SimConfig& sim = spec.sim;
  const std::size_t steps = sim.steps();
  const StateSpaceModel ss = tf_to_state_space(spec.plant);

  std::vector<double> r(steps + 1, 0.0);
  std::vector<double> y_true(steps + 1, 0.0);
  std::vector<double> y_meas(steps + 1, 0.0);
  std::vector<double> err(steps + 1, 0.0);
  std::vector<double> u(steps + 1, 0.0);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(ss.order());
  PidState pid;
  SensorState sensor_state;
  sensor_state.rng.seed = spec.seed;
  double u_prev = 0.0;

  std::size_t produced = steps + 1;
  std::optional<double> diverged_at;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * sim.dt;
    r[k] = spec.setpoint(t);
    y_true[k] = ss.output(x, u_prev);
    if (spec.sensor || spec.fault) {
      const auto m = apply_sensor(y_true[k], spec.sensor.value_or(SensorModel{}), spec.fault, t,
                                  sensor_state);
      y_meas[k] = m.measured;
      sensor_state = m.state;
    } else {
      y_meas[k] = y_true[k];
    }
    err[k] = r[k] - y_meas[k];
    if (!std::isfinite(err[k]) || std::abs(y_true[k]) > sim.divergence_limit) {
      produced = k;
      diverged_at = t;
      break;
    }
    const PidStep step = pid_step(pid, err[k], sim.dt, spec.gains);
    pid = step.state;
    u[k] = step.output;
    u_prev = u[k];
    if (k == steps) break;
    integrate_step_held(ss, x, u[k], sim.dt, sim.integrator);
    if (!finite_within(x, sim.divergence_limit) || !std::isfinite(u[k]) ||
        std::abs(u[k]) > sim.divergence_limit) {
      produced = k + 1;
      diverged_at = t + sim.dt;
      break;
    }
  }

  LoopResult result;
  result.series = TimeSeries(sim.dt, steps + 1);
  result.series.truncate(produced);
  for (auto* v : {&r, &y_true, &y_meas, &err, &u}) v->resize(produced);
  result.series.add_channel("setpoint", std::move(r));
  result.series.add_channel("y_true", std::move(y_true));
  result.series.add_channel("y_measured", std::move(y_meas));
  result.series.add_channel("error", std::move(err));
  result.series.add_channel("u", std::move(u));
  result.series.diverged_at = diverged_at;
  result.diverged_at = diverged_at;

  result.final_setpoint = spec.setpoint(static_cast<double>(steps) * sim.dt);
  if (produced > 0) {
    result.metrics = response_metrics(result.series, result.final_setpoint, "y_true");
  }

  if (spec.linear()) {
    const auto [num_c, den_c] = controller_polynomials(spec.gains);
    Polynomial ch = characteristic_polynomial(num_c, den_c, spec.plant);
    if (ch.degree() >= 1) result.closed_loop_poles = polynomial_roots(ch);
    result.stability_verdict = classify_poles(result.closed_loop_poles);
    result.characteristic = std::move(ch);
  }

  if (spec.detector && produced > 0) {
    const auto yt = result.series.channel("y_true");
    const auto ym = result.series.channel("y_measured");
    std::vector<double> residual(produced);
    for (std::size_t k = 0; k < produced; ++k) residual[k] = ym[k] - yt[k];
    result.fault_events = detect_faults(residual, sim.dt, *spec.detector);
  }
  return result;
}

LoopResult speed_loop(const RollDriveParams& p, const PidGains& gains,
                      const SetpointProfile& setpoint, const SimConfig& sim) {
  LoopSpec spec;
  spec.plant = roll_drive_tf(p);
  spec.gains = gains;
  spec.setpoint = setpoint;
  spec.sim = sim;
  return simulate_loop(spec);
}

LoopResult thickness_loop(const PowerScrewParams& p, KinematicsMode mode, const PidGains& gains,
                          const SetpointProfile& setpoint, const SimConfig& sim) {
  LoopSpec spec;
  spec.plant = power_screw_tf(p, mode);
  spec.gains = gains;
  spec.setpoint = setpoint;
  spec.sim = sim;
  return simulate_loop(spec);
}

bool MultibodyDemo::consistent() const {
  return verdict_matches(open_verdict, open_boundedness) &&
         verdict_matches(*ideal.stability_verdict, ideal_boundedness) &&
         verdict_matches(*filtered.stability_verdict, filtered_boundedness) &&
         (open_routh == RouthClass::hurwitz_stable) ==
             (open_verdict == StabilityVerdict::poles_stable);
}

MultibodyDemo multibody_demo(const PidGains& gains, const SimConfig& sim) {
  const TransferFunction plant = multibody_tf();
  MultibodyDemo demo;

  demo.open_loop = step_response(plant, sim);
  demo.open_poles = poles(plant);
  demo.open_verdict = classify_poles(demo.open_poles);
  demo.open_routh = routh_classification(plant.den());
  demo.open_boundedness =
      classify_boundedness(demo.open_loop.channel("y"), demo.open_loop.diverged_at.has_value());

  LoopSpec spec;
  spec.plant = plant;
  spec.setpoint = SetpointProfile::step(1.0);
  spec.sim = sim;
  spec.gains = gains;
  spec.gains.output_min.reset();
  spec.gains.output_max.reset();

  spec.gains.n = 0.0;
  demo.ideal = simulate_loop(spec);
  demo.ideal_routh = routh_classification(*demo.ideal.characteristic);
  demo.ideal_boundedness =
      classify_boundedness(demo.ideal.series.channel("y_true"), demo.ideal.diverged());

  spec.gains.n = gains.n > 0.0 ? gains.n : kDefaultDerivativeFilter;
  demo.filtered = simulate_loop(spec);
  demo.filtered_routh = routh_classification(*demo.filtered.characteristic);
  demo.filtered_boundedness =
      classify_boundedness(demo.filtered.series.channel("y_true"), demo.filtered.diverged());
  return demo;
}

}  // namespace rollsim
