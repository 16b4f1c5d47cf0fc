#include "rollsim/lti/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

void derivative(const StateSpaceModel& ss, const Eigen::VectorXd& x, double u, Eigen::VectorXd& out) {
  out.noalias() = ss.A * x;
  out += ss.B * u;
}

// Stage buffers reused across steps so the inner loop does not allocate.
struct Rk4Scratch {
  Eigen::VectorXd k1, k2, k3, k4, xt;
};

Rk4Scratch& scratch(Eigen::Index n) {
  thread_local Rk4Scratch s;
  if (s.k1.size() != n) {
    for (auto* v : {&s.k1, &s.k2, &s.k3, &s.k4, &s.xt}) v->resize(n);
  }
  return s;
}

void rk4_step(const StateSpaceModel& ss, Eigen::VectorXd& x, double u0, double u_mid, double u1,
              double h) {
  Rk4Scratch& s = scratch(x.size());
  derivative(ss, x, u0, s.k1);
  s.xt = x + 0.5 * h * s.k1;
  derivative(ss, s.xt, u_mid, s.k2);
  s.xt = x + 0.5 * h * s.k2;
  derivative(ss, s.xt, u_mid, s.k3);
  s.xt = x + h * s.k3;
  derivative(ss, s.xt, u1, s.k4);
  x += (h / 6.0) * (s.k1 + 2.0 * s.k2 + 2.0 * s.k3 + s.k4);
}

void euler_step(const StateSpaceModel& ss, Eigen::VectorXd& x, double u, double h) {
  Rk4Scratch& s = scratch(x.size());
  derivative(ss, x, u, s.k1);
  x += h * s.k1;
}

bool within(const Eigen::VectorXd& x, double limit) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x(i)) || std::abs(x(i)) > limit) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Integrator i) { return i == Integrator::rk4 ? "rk4" : "euler"; }

Integrator integrator_from_string(std::string_view s) {
  if (s == "rk4") return Integrator::rk4;
  if (s == "euler") return Integrator::euler;
  throw InvalidArgument("unknown integrator '" + std::string(s) + "' (expected rk4 or euler)");
}

const char* to_string(Boundedness b) { return b == Boundedness::bounded ? "bounded" : "growing"; }

void SimConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("sim.dt must be > 0");
  if (!(t_end >= dt) || !std::isfinite(t_end)) throw InvalidArgument("sim.t_end must be >= dt");
  if (!(divergence_limit > 0.0)) throw InvalidArgument("sim.divergence_limit must be > 0");
}

std::size_t SimConfig::steps() const {
  return static_cast<std::size_t>(std::llround(t_end / dt));
}

void integrate_step(const StateSpaceModel& ss, Eigen::VectorXd& x, const InputSignal& u,
                    double t, double h, Integrator method) {
  if (ss.order() == 0) return;
  if (method == Integrator::euler) {
    euler_step(ss, x, u(t), h);
    return;
  }
  rk4_step(ss, x, u(t), u(t + 0.5 * h), u(t + h), h);
}

void integrate_step_held(const StateSpaceModel& ss, Eigen::VectorXd& x, double u, double h,
                         Integrator method) {
  if (ss.order() == 0) return;
  if (method == Integrator::euler) {
    euler_step(ss, x, u, h);
    return;
  }
  rk4_step(ss, x, u, u, u, h);
}

TimeSeries simulate_lti(const StateSpaceModel& ss, const InputSignal& input,
                        const SimConfig& cfg) {
  cfg.validate();
  const std::size_t steps = cfg.steps();
  TimeSeries ts(cfg.dt, steps + 1);
  std::vector<double> u(steps + 1, 0.0);
  std::vector<double> y(steps + 1, 0.0);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(ss.order());
  std::size_t produced = steps + 1;
  std::optional<double> diverged_at;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    u[k] = input(t);
    y[k] = ss.output(x, u[k]);
    if (!std::isfinite(y[k]) || std::abs(y[k]) > cfg.divergence_limit) {
      produced = k;
      diverged_at = t;
      break;
    }
    if (k == steps) break;
    integrate_step(ss, x, input, t, cfg.dt, cfg.integrator);
    if (!within(x, cfg.divergence_limit)) {
      produced = k + 1;
      diverged_at = t + cfg.dt;
      break;
    }
  }
  u.resize(produced);
  y.resize(produced);
  ts.truncate(produced);
  ts.add_channel("u", std::move(u));
  ts.add_channel("y", std::move(y));
  ts.diverged_at = diverged_at;
  return ts;
}

TimeSeries step_response(const TransferFunction& tf, const SimConfig& cfg) {
  return simulate_lti(tf_to_state_space(tf), [](double) { return 1.0; }, cfg);
}

Boundedness classify_boundedness(std::span<const double> y, bool diverged) {
  if (diverged) return Boundedness::growing;
  if (y.size() < 4) return Boundedness::bounded;
  const std::size_t half = y.size() / 2;
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i])) return Boundedness::growing;
    (i < half ? first : second) = std::max(i < half ? first : second, std::abs(y[i]));
  }
  if (second == 0.0) return Boundedness::bounded;
  return second > 10.0 * first ? Boundedness::growing : Boundedness::bounded;
}

}  // namespace rollsim
