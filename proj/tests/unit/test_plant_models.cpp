#include <gtest/gtest.h>

#include <numbers>

#include "rollsim/error.hpp"
#include "rollsim/lti/roots.hpp"
#include "rollsim/lti/routh.hpp"
#include "rollsim/lti/simulate.hpp"
#include "rollsim/plant/plant_models.hpp"

using namespace rollsim;

TEST(RollDrive, DefaultsGiveRadiusScaledFirstOrder) {
  const auto tf = roll_drive_tf(RollDriveParams{});
  EXPECT_EQ(tf.num(), Polynomial{0.125});
  EXPECT_EQ(tf.den(), (Polynomial{1.0, 1.0}));
}

TEST(RollDrive, UnityRadius) {
  const auto tf = roll_drive_tf({.K = 1.0, .J = 1.0, .B = 1.0, .r = 1.0});
  EXPECT_EQ(tf, tf_new({1.0}, {1.0, 1.0}));
}

TEST(RollDrive, DcGain) {
  const auto tf = roll_drive_tf({.K = 2.0, .J = 1.0, .B = 0.5, .r = 0.125});
  EXPECT_DOUBLE_EQ(dc_gain(tf), 0.5);
}

TEST(RollDrive, PoleAtMinusBOverJ) {
  const auto p = poles(roll_drive_tf({.K = 1.0, .J = 2.0, .B = 3.0, .r = 0.1}));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_NEAR(p[0].real(), -1.5, 1e-14);
}

TEST(RollDrive, RejectsNonPositive) {
  EXPECT_THROW(roll_drive_tf({.K = 1.0, .J = 0.0, .B = 1.0, .r = 1.0}), InvalidArgument);
  EXPECT_THROW(roll_drive_tf({.K = 1.0, .J = 1.0, .B = -1.0, .r = 1.0}), InvalidArgument);
}

TEST(PowerScrew, DirectMode) {
  const auto tf = power_screw_tf(PowerScrewParams{}, KinematicsMode::direct);
  EXPECT_EQ(tf.order(), 1);
  EXPECT_NEAR(tf.num().leading(), 7.9577e-4, 1e-8);
  EXPECT_DOUBLE_EQ(tf.num().leading(), 0.005 / (2.0 * std::numbers::pi));
}

TEST(PowerScrew, IntegratedAddsPoleAtOrigin) {
  const auto tf = power_screw_tf(PowerScrewParams{}, KinematicsMode::integrated);
  EXPECT_EQ(tf.den(), (Polynomial{1.0, 1.0, 0.0}));
  const auto p = poles(power_screw_tf({.K_ps = 1.0, .J_ps = 2.0, .B_ps = 1.0, .lead = 0.01},
                                      KinematicsMode::integrated));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0].real(), -0.5, 1e-14);
  EXPECT_EQ(p[1], std::complex<double>(0.0, 0.0));
}

TEST(PowerScrew, IntegratedRampSlope) {
  SimConfig cfg;
  cfg.t_end = 20.0;
  const auto ts = step_response(power_screw_tf(PowerScrewParams{}, KinematicsMode::integrated), cfg);
  const auto y = ts.channel("y");
  const double slope = (y[y.size() - 1] - y[y.size() - 1001]) / 1.0;
  EXPECT_NEAR(slope, 7.9577e-4, 1e-7);
}

TEST(PowerScrew, ModeStrings) {
  EXPECT_EQ(kinematics_mode_from_string("direct"), KinematicsMode::direct);
  EXPECT_STREQ(to_string(KinematicsMode::integrated), "integrated");
  EXPECT_THROW(kinematics_mode_from_string("angle"), InvalidArgument);
}

TEST(Multibody, ExactConstant) {
  const auto tf = multibody_tf();
  EXPECT_EQ(tf.den().degree(), 8);
  EXPECT_DOUBLE_EQ(dc_gain(tf), 1.0);
  EXPECT_EQ(routh_classification(tf.den()), RouthClass::not_hurwitz);
  EXPECT_EQ(tf.den(), (Polynomial{1.0, 0.0, 3.571, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}));
}

TEST(Plants, Linearity) {
  SimConfig cfg;
  cfg.t_end = 5.0;
  const auto ss = tf_to_state_space(roll_drive_tf(RollDriveParams{}));
  const auto a = simulate_lti(ss, [](double) { return 1.0; }, cfg);
  const auto b = simulate_lti(ss, [](double) { return 3.0; }, cfg);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(b.channel("y")[k], 3.0 * a.channel("y")[k], 1e-12);
  }
}
