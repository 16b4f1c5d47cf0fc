#include <gtest/gtest.h>

#include "rollsim/error.hpp"
#include "rollsim/plant/plant_models.hpp"
#include "rollsim/tuning/tuning.hpp"

using namespace rollsim;

namespace {

LoopSpec speed_loop_spec() {
  LoopSpec spec;
  spec.plant = roll_drive_tf(RollDriveParams{});
  spec.setpoint = SetpointProfile::step(1.0);
  spec.sim.t_end = 10.0;
  return spec;
}

TuneSpec kp_only(TuneMethod method) {
  TuneSpec t;
  t.loop = speed_loop_spec();
  t.method = method;
  t.bounds[0] = GainRange{0.1, 10.0, {}};
  t.initial = PidGains{.kp = 0.1};
  return t;
}

double cost_at(const LoopSpec& base, PidGains g, CostKind kind) {
  LoopSpec s = base;
  s.gains = g;
  return loop_cost(s, kind);
}

}  // namespace

TEST(LoopCost, ZeroSetpoint) {
  LoopSpec spec;
  spec.gains = PidGains{.kp = 1.0};
  for (auto k : {CostKind::itae, CostKind::ise, CostKind::iae}) EXPECT_EQ(loop_cost(spec, k), 0.0);
}

TEST(LoopCost, HigherGainLowersItae) {
  const auto base = speed_loop_spec();
  EXPECT_LT(cost_at(base, {.kp = 8.0}, CostKind::itae), cost_at(base, {.kp = 1.0}, CostKind::itae));
}

TEST(LoopCost, OpenLoopUnitErrorIntegrals) {
  // kp = 0 leaves e = 1 throughout: IAE = ISE = T, ITAE = T²/2 (rectangle sums).
  LoopSpec spec = speed_loop_spec();
  spec.sim.t_end = 2.0;
  EXPECT_NEAR(loop_cost(spec, CostKind::iae), 2.0, 2e-3);
  EXPECT_NEAR(loop_cost(spec, CostKind::ise), 2.0, 2e-3);
  EXPECT_NEAR(loop_cost(spec, CostKind::itae), 2.0, 3e-3);
}

TEST(LoopCost, PenaltyIffDiverged) {
  LoopSpec spec;
  spec.plant = multibody_tf();
  spec.gains = PidGains{.kp = 0.00941, .ki = 6.53e-05, .kd = 0.339};
  spec.setpoint = SetpointProfile::step(1.0);
  for (double t_end : {20.0, 100.0}) {
    spec.sim.t_end = t_end;
    const bool diverged = simulate_loop(spec).diverged();
    const double c = loop_cost(spec, CostKind::itae);
    EXPECT_EQ(c == kDivergencePenalty, diverged) << "t_end=" << t_end;
  }
  spec.sim.t_end = 100.0;
  EXPECT_TRUE(simulate_loop(spec).diverged());
}

TEST(Tune, GridPicksLargestGain) {
  TuneSpec t = kp_only(TuneMethod::grid);
  t.bounds[0].values = {0.1, 1.0, 10.0};
  const auto r = tune_pid(t);
  EXPECT_EQ(r.best_gains.kp, 10.0);
  EXPECT_EQ(r.evals, 3);
  EXPECT_EQ(r.history.size(), 3u);
}

TEST(Tune, CollapsedBoundsEvaluateOnce) {
  for (auto m : {TuneMethod::grid, TuneMethod::nelder_mead}) {
    TuneSpec t = kp_only(m);
    t.bounds[0] = GainRange{2.0, 2.0, {}};
    t.initial.kp = 2.0;
    const auto r = tune_pid(t);
    EXPECT_EQ(r.evals, 1);
    EXPECT_EQ(r.best_gains.kp, 2.0);
  }
}

TEST(Tune, NelderMeadHalvesInitialCost) {
  const TuneSpec t = kp_only(TuneMethod::nelder_mead);
  const auto r = tune_pid(t);
  const double initial = cost_at(t.loop, t.initial, t.cost);
  EXPECT_EQ(r.history.front().cost, initial);
  EXPECT_LE(r.best_cost, 0.5 * initial);
}

TEST(Tune, BestIsMinimumOfHistory) {
  TuneSpec t = kp_only(TuneMethod::nelder_mead);
  t.bounds[1] = GainRange{0.0, 5.0, {}};
  t.max_evals = 60;
  const auto r = tune_pid(t);
  EXPECT_LE(r.evals, 60);
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : r.history) m = std::min(m, e.cost);
  EXPECT_EQ(r.best_cost, m);
}

TEST(Tune, StaysInsideBounds) {
  for (auto m : {TuneMethod::grid, TuneMethod::nelder_mead}) {
    TuneSpec t = kp_only(m);
    t.bounds[0] = GainRange{0.5, 3.0, {}};
    t.bounds[1] = GainRange{0.0, 2.0, {}};
    t.bounds[2] = GainRange{0.0, 0.1, {}};
    t.initial = PidGains{.kp = 0.5, .n = 50.0};
    t.grid_points = 3;
    t.max_evals = 80;
    const auto r = tune_pid(t);
    for (const auto& e : r.history) {
      EXPECT_GE(e.gains.kp, 0.5);
      EXPECT_LE(e.gains.kp, 3.0);
      EXPECT_GE(e.gains.ki, 0.0);
      EXPECT_LE(e.gains.ki, 2.0);
      EXPECT_GE(e.gains.kd, 0.0);
      EXPECT_LE(e.gains.kd, 0.1);
    }
  }
}

TEST(Tune, Deterministic) {
  TuneSpec t = kp_only(TuneMethod::nelder_mead);
  t.bounds[1] = GainRange{0.0, 5.0, {}};
  const auto a = tune_pid(t);
  const auto b = tune_pid(t);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    EXPECT_EQ(a.history[i].gains, b.history[i].gains);
    EXPECT_EQ(a.history[i].cost, b.history[i].cost);
  }
}

TEST(Tune, ThreadedGridMatchesSerial) {
  TuneSpec t = kp_only(TuneMethod::grid);
  t.bounds[1] = GainRange{0.0, 4.0, {}};
  t.grid_points = 4;
  const auto serial = tune_pid(t);
  t.jobs = 4;
  const auto threaded = tune_pid(t);
  ASSERT_EQ(serial.history.size(), threaded.history.size());
  for (std::size_t i = 0; i < serial.history.size(); ++i) {
    EXPECT_EQ(serial.history[i].cost, threaded.history[i].cost);
  }
  EXPECT_EQ(serial.best_gains, threaded.best_gains);
}

TEST(Tune, GridTieBreaksLexicographically) {
  // Zero setpoint makes every candidate cost 0.
  TuneSpec t = kp_only(TuneMethod::grid);
  t.loop.setpoint = SetpointProfile{};
  t.bounds[1] = GainRange{0.0, 1.0, {}};
  const auto r = tune_pid(t);
  EXPECT_EQ(r.best_gains.kp, 0.1);
  EXPECT_EQ(r.best_gains.ki, 0.0);
}

TEST(Tune, LogGridSpacing) {
  TuneSpec t = kp_only(TuneMethod::grid);
  t.grid_points = 3;
  t.grid_scale = GridScale::log;
  const auto r = tune_pid(t);
  ASSERT_EQ(r.history.size(), 3u);
  EXPECT_NEAR(r.history[1].gains.kp, 1.0, 1e-12);
}

TEST(Tune, Validation) {
  TuneSpec t = kp_only(TuneMethod::grid);
  t.bounds[0] = GainRange{2.0, 1.0, {}};
  EXPECT_THROW(tune_pid(t), InvalidArgument);
  t = kp_only(TuneMethod::grid);
  t.bounds[1] = GainRange{-1.0, 1.0, {}};
  EXPECT_THROW(tune_pid(t), InvalidArgument);
  t = kp_only(TuneMethod::nelder_mead);
  t.max_evals = 0;
  EXPECT_THROW(tune_pid(t), InvalidArgument);
}

TEST(Tune, EnumStrings) {
  EXPECT_EQ(cost_kind_from_string("ITAE"), CostKind::itae);
  EXPECT_STREQ(to_string(CostKind::ise), "ISE");
  EXPECT_EQ(tune_method_from_string("grid"), TuneMethod::grid);
  EXPECT_THROW(tune_method_from_string("annealing"), InvalidArgument);
}
