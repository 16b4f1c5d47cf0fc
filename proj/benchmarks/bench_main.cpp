#include <benchmark/benchmark.h>

#include "rollsim/loops/loops.hpp"
#include "rollsim/lti/roots.hpp"
#include "rollsim/plant/plant_models.hpp"
#include "rollsim/tuning/tuning.hpp"

using namespace rollsim;

static void BM_StepResponseRk4(benchmark::State& state) {
  const auto tf = tf_new({1.0, 2.0}, {1.0, 3.0, 3.0, 1.0});
  SimConfig cfg;
  cfg.t_end = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto ts = step_response(tf, cfg);
    benchmark::DoNotOptimize(ts.channel("y").back());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.steps()));
}
BENCHMARK(BM_StepResponseRk4)->Arg(10)->Arg(100);

static void BM_PolynomialRoots(benchmark::State& state) {
  std::vector<double> c(static_cast<std::size_t>(state.range(0)) + 1, 0.0);
  c.front() = 1.0;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = 1.0 / static_cast<double>(i);
  const Polynomial p(c);
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_roots(p));
}
BENCHMARK(BM_PolynomialRoots)->Arg(4)->Arg(10)->Arg(20);

static void BM_SpeedLoop(benchmark::State& state) {
  SimConfig sim;
  sim.t_end = 20.0;
  for (auto _ : state) {
    auto r = speed_loop(RollDriveParams{}, PidGains{.kp = 8.0, .ki = 8.0}, SetpointProfile::step(0.5), sim);
    benchmark::DoNotOptimize(r.metrics.final_value);
  }
}
BENCHMARK(BM_SpeedLoop)->Unit(benchmark::kMillisecond);

static void BM_MultibodyDemo(benchmark::State& state) {
  SimConfig sim;
  sim.t_end = 100.0;
  const PidGains g{.kp = 0.00941, .ki = 6.53e-05, .kd = 0.339};
  for (auto _ : state) benchmark::DoNotOptimize(multibody_demo(g, sim).consistent());
}
BENCHMARK(BM_MultibodyDemo)->Unit(benchmark::kMillisecond);

static void BM_GridTune(benchmark::State& state) {
  TuneSpec t;
  t.loop.plant = roll_drive_tf(RollDriveParams{});
  t.loop.setpoint = SetpointProfile::step(1.0);
  t.loop.sim.t_end = 10.0;
  t.method = TuneMethod::grid;
  t.bounds[0] = GainRange{0.5, 10.0, {}};
  t.bounds[1] = GainRange{0.0, 5.0, {}};
  t.grid_points = 6;
  t.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tune_pid(t).best_cost);
}
BENCHMARK(BM_GridTune)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
