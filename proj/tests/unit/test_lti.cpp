#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rollsim/error.hpp"
#include "rollsim/lti/simulate.hpp"
#include "rollsim/lti/state_space.hpp"
#include "rollsim/lti/transfer_function.hpp"
#include "rollsim/lti/roots.hpp"

using namespace rollsim;

TEST(TfNew, FirstOrder) {
  const auto tf = tf_new({1.0}, {1.0, 1.0});
  EXPECT_EQ(tf.order(), 1);
  EXPECT_EQ(tf.num(), Polynomial{1.0});
}

TEST(TfNew, NormalizesLeadingDenominator) {
  const auto tf = tf_new({4.0}, {2.0, 1.0});
  EXPECT_DOUBLE_EQ(tf.den().leading(), 1.0);
  EXPECT_DOUBLE_EQ(tf.num().leading(), 2.0);
  EXPECT_DOUBLE_EQ(tf.den().constant_term(), 0.5);
}

TEST(TfNew, EighthOrderMultibodyDenominator) {
  const auto tf = tf_new({1.0}, {1.0, 0.0, 3.571, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  EXPECT_EQ(tf.order(), 8);
}

TEST(TfNew, Errors) {
  EXPECT_THROW(tf_new({1.0, 0.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(tf_new({1.0}, {0.0, 0.0}), InvalidArgument);
}

TEST(DcGain, Values) {
  EXPECT_DOUBLE_EQ(dc_gain(tf_new({2.0}, {1.0, 0.5})), 4.0);
  EXPECT_DOUBLE_EQ(dc_gain(tf_new({1.0}, {1.0, 0.0, 3.571, 0, 0, 0, 0, 0, 1.0})), 1.0);
  EXPECT_TRUE(std::isinf(dc_gain(tf_new({1.0}, {1.0, 0.0}))));
  EXPECT_THROW((void)dc_gain(tf_new({1.0, 0.0}, {1.0, 0.0})), DomainError);
}

TEST(StateSpace, FirstOrderCanonical) {
  const auto ss = tf_to_state_space(tf_new({1.0}, {1.0, 1.0}));
  ASSERT_EQ(ss.order(), 1);
  EXPECT_DOUBLE_EQ(ss.A(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(ss.B(0), 1.0);
  EXPECT_DOUBLE_EQ(ss.C(0), 1.0);
  EXPECT_DOUBLE_EQ(ss.D, 0.0);
}

TEST(StateSpace, MotorPlant) {
  // K/(Js+B) with K=2, J=1, B=0.5
  const auto ss = tf_to_state_space(tf_new({2.0}, {1.0, 0.5}));
  EXPECT_DOUBLE_EQ(ss.A(0, 0), -0.5);
  EXPECT_DOUBLE_EQ(ss.B(0), 1.0);
  EXPECT_DOUBLE_EQ(ss.C(0), 2.0);
  EXPECT_DOUBLE_EQ(ss.D, 0.0);
}

TEST(StateSpace, SecondOrderPoles) {
  const auto ss = tf_to_state_space(tf_new({1.0, 2.0}, {1.0, 3.0, 2.0}));
  ASSERT_EQ(ss.order(), 2);
  Eigen::EigenSolver<Eigen::MatrixXd> es(ss.A);
  std::vector<double> re{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -2.0, 1e-12);
  EXPECT_NEAR(re[1], -1.0, 1e-12);
}

TEST(StateSpace, BiproperFeedthrough) {
  // (2s + 3)/(s + 1) = 2 + 1/(s+1)
  const auto ss = tf_to_state_space(tf_new({2.0, 3.0}, {1.0, 1.0}));
  EXPECT_DOUBLE_EQ(ss.D, 2.0);
  EXPECT_DOUBLE_EQ(ss.C(0), 1.0);
}

// Realization recovers the source TF (Faddeev-LeVerrier oracle) on random
// small systems.
TEST(StateSpace, RealizationRoundTripProperty) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = deg(rng);
    std::vector<double> den(static_cast<std::size_t>(n) + 1);
    std::vector<double> num(static_cast<std::size_t>(n) + 1);
    den[0] = 1.0;
    for (std::size_t i = 1; i < den.size(); ++i) den[i] = coef(rng);
    for (auto& c : num) c = coef(rng);
    const auto tf = tf_new(num, den);
    const auto ss = tf_to_state_space(tf);
    const auto back = oracle::transfer_from_state_space(ss.A, ss.B, ss.C, ss.D);
    for (int p = 0; p <= n; ++p) {
      EXPECT_NEAR(back.den[static_cast<std::size_t>(n - p)], tf.den().coeff_of_power(p), 1e-9);
      EXPECT_NEAR(back.num[static_cast<std::size_t>(n - p)], tf.num().coeff_of_power(p), 1e-9);
    }
  }
}

TEST(SimConfig, Validation) {
  SimConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.steps(), 20000u);
  cfg.dt = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = SimConfig{};
  cfg.t_end = 1e-4;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Simulate, ZeroInputGivesZeroOutput) {
  const auto ss = tf_to_state_space(tf_new({1.0, 2.0}, {1.0, 3.0, 2.0}));
  SimConfig cfg;
  cfg.t_end = 2.0;
  const auto ts = simulate_lti(ss, [](double) { return 0.0; }, cfg);
  for (double y : ts.channel("y")) EXPECT_EQ(y, 0.0);
  EXPECT_EQ(ts.size(), cfg.steps() + 1);
}

TEST(Simulate, FirstOrderStepMatchesAnalytic) {
  SimConfig cfg;
  cfg.t_end = 1.0;
  const auto ts = step_response(tf_new({1.0}, {1.0, 1.0}), cfg);
  EXPECT_NEAR(ts.channel("y").back(), 0.632121, 1e-5);
  EXPECT_NEAR(ts.channel("y").back(), oracle::first_order_step(1.0), 1e-4);
}

TEST(Simulate, MotorPlantSettlesToDcGain) {
  SimConfig cfg;
  cfg.t_end = 20.0;
  const auto tf = tf_new({1.0}, {1.0, 1.0});
  const auto ts = step_response(tf, cfg);
  EXPECT_NEAR(ts.channel("y").back(), dc_gain(tf), 1e-6);
}

TEST(Simulate, PureGainIsConstant) {
  SimConfig cfg;
  cfg.t_end = 0.5;
  const auto ts = step_response(tf_new({2.0}, {1.0}), cfg);
  for (double y : ts.channel("y")) EXPECT_DOUBLE_EQ(y, 2.0);
}

TEST(Simulate, EulerIsFirstOrderAccurate) {
  SimConfig cfg;
  cfg.t_end = 1.0;
  cfg.integrator = Integrator::euler;
  const auto tf = tf_new({1.0}, {1.0, 1.0});
  auto max_err = [&](double dt) {
    cfg.dt = dt;
    const auto ts = step_response(tf, cfg);
    double e = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      e = std::max(e, std::abs(ts.channel("y")[k] - oracle::first_order_step(ts.t()[k])));
    }
    return e;
  };
  const double ratio = max_err(1e-2) / max_err(5e-3);
  EXPECT_NEAR(ratio, 2.0, 0.1);
}

TEST(Simulate, Rk4ConvergenceOrder) {
  SimConfig cfg;
  cfg.t_end = 5.0;
  const auto tf = tf_new({1.0}, {1.0, 1.0});
  auto max_err = [&](double dt) {
    cfg.dt = dt;
    const auto ts = step_response(tf, cfg);
    double e = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      e = std::max(e, std::abs(ts.channel("y")[k] - oracle::first_order_step(ts.t()[k])));
    }
    return e;
  };
  const double ratio = max_err(0.1) / max_err(0.05);
  EXPECT_GE(ratio, 12.0);
  EXPECT_LE(ratio, 20.0);
}

TEST(Simulate, Linearity) {
  const auto ss = tf_to_state_space(tf_new({1.0, 0.5}, {1.0, 2.0, 5.0, 1.0}));
  SimConfig cfg;
  cfg.t_end = 3.0;
  auto input = [](double t) { return std::sin(3.0 * t) + 0.2 * t; };
  const double a = -3.7;
  const auto base = simulate_lti(ss, input, cfg);
  const auto scaled = simulate_lti(ss, [&](double t) { return a * input(t); }, cfg);
  for (std::size_t k = 0; k < base.size(); ++k) {
    const double expect = a * base.channel("y")[k];
    EXPECT_NEAR(scaled.channel("y")[k], expect, 1e-9 * std::max(1.0, std::abs(expect)));
  }
}

TEST(Simulate, FinalValueMatchesDcGainProperty) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(1, 4);
  std::uniform_real_distribution<double> coef(0.5, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = deg(rng);
    const auto roots = oracle::random_roots(rng, n, true, 0.5, 3.0);
    const auto den = oracle::poly_from_roots(roots);
    std::vector<double> num(static_cast<std::size_t>(n));
    for (auto& c : num) c = coef(rng);
    const auto tf = tf_new(num, den);
    double slowest = 1e9;
    for (const auto& r : roots) slowest = std::min(slowest, std::abs(r.real()));
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = std::ceil(15.0 / slowest);
    const auto ts = step_response(tf, cfg);
    const double g = dc_gain(tf);
    EXPECT_NEAR(ts.channel("y").back(), g, 1e-3 * std::abs(g)) << "trial " << trial;
  }
}

TEST(Simulate, DivergenceIsRecorded) {
  SimConfig cfg;
  cfg.t_end = 100.0;
  cfg.dt = 1e-2;
  const auto ts = step_response(tf_new({1.0}, {1.0, -1.0}), cfg);
  ASSERT_TRUE(ts.diverged_at.has_value());
  // e^t crosses 1e12 near t = 27.6
  EXPECT_NEAR(*ts.diverged_at, std::log(1e12), 0.05);
  EXPECT_LT(ts.size(), cfg.steps() + 1);
  EXPECT_EQ(classify_boundedness(ts.channel("y"), true), Boundedness::growing);
}

TEST(Boundedness, Classifier) {
  std::vector<double> settled(1000, 1.0);
  EXPECT_EQ(classify_boundedness(settled, false), Boundedness::bounded);
  std::vector<double> grow(1000);
  for (std::size_t k = 0; k < grow.size(); ++k) grow[k] = std::exp(0.01 * static_cast<double>(k));
  EXPECT_EQ(classify_boundedness(grow, false), Boundedness::growing);
  std::vector<double> zeros(100, 0.0);
  EXPECT_EQ(classify_boundedness(zeros, false), Boundedness::bounded);
}

TEST(TimeSeries, ChannelLengthMismatchRejected) {
  TimeSeries ts(0.1, 5);
  EXPECT_THROW(ts.add_channel("y", {1.0, 2.0}), InvalidArgument);
  ts.add_channel("y", {1, 2, 3, 4, 5});
  EXPECT_THROW(ts.add_channel("y", {1, 2, 3, 4, 5}), InvalidArgument);
  EXPECT_DOUBLE_EQ(ts.t()[4], 0.4);
}
