#include "rollsim/sizing/sizing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

void check(bool ok, const char* field, const char* rule) {
  if (!ok) throw InvalidArgument(std::string(field) + ": " + rule);
}

void check_poles(int poles) {
  if (poles < 2 || poles % 2 != 0) {
    throw InvalidArgument("motor_poles: must be even and >= 2, got " + std::to_string(poles));
  }
}

}  // namespace

const char* to_string(ContactLengthMode m) {
  return m == ContactLengthMode::approx ? "approx" : "exact";
}

ContactLengthMode contact_length_mode_from_string(std::string_view s) {
  if (s == "approx") return ContactLengthMode::approx;
  if (s == "exact") return ContactLengthMode::exact;
  throw InvalidArgument("unknown contact length mode '" + std::string(s) + "'");
}

void SizingInputs::validate() const {
  check(sigma_y > 0.0, "sigma_y", "must be > 0");
  check(width_w > 0.0, "width_w", "must be > 0");
  check(t_initial > 0.0, "t_initial", "must be > 0");
  check(t_final > 0.0, "t_final", "must be > 0");
  check(t_final <= t_initial, "t_final", "must not exceed t_initial");
  check(roll_diameter_D > 0.0, "roll_diameter_D", "must be > 0");
  check(t_initial - t_final < roll_diameter_D, "roll_diameter_D",
        "draft t_initial - t_final must be smaller than the roll diameter");
  check(line_speed_v >= 0.0, "line_speed_v", "must be >= 0");
  check(motor_rpm > 0.0, "motor_rpm", "must be > 0");
  check_poles(motor_poles);
}

double contact_length(double t_initial, double t_final, double roll_diameter,
                      ContactLengthMode mode) {
  const double draft = t_initial - t_final;
  if (!(roll_diameter > 0.0)) throw InvalidArgument("roll diameter must be > 0");
  const double ratio = draft / roll_diameter;
  if (ratio > 1.0) throw DomainError("draft exceeds roll diameter: asin argument > 1");
  if (mode == ContactLengthMode::approx) return draft;
  return roll_diameter * std::asin(ratio);
}

double compression_force(const SizingInputs& in) {
  const double L = contact_length(in.t_initial, in.t_final, in.roll_diameter_D, in.contact_mode);
  return in.sigma_y * in.width_w * L;
}

double roll_torque(double force, double roll_diameter) { return force * roll_diameter / 2.0; }

double roll_angular_velocity(double line_speed, double roll_diameter) {
  if (!(roll_diameter > 0.0)) throw InvalidArgument("roll diameter must be > 0");
  return line_speed / (roll_diameter / 2.0);
}

double rad_per_s_to_rpm(double omega) { return omega * 60.0 / (2.0 * std::numbers::pi); }

double motor_power(double torque, double omega) { return torque * omega; }

double gear_ratio(double motor_rpm, double roll_rpm) {
  if (roll_rpm == 0.0) throw DomainError("gear ratio undefined for zero roll speed");
  return motor_rpm / roll_rpm;
}

double vfd_frequency(double rpm, int poles) {
  check_poles(poles);
  return rpm * poles / 120.0;
}

double synchronous_rpm(double frequency, int poles) {
  check_poles(poles);
  return 120.0 * frequency / poles;
}

SizingReport size_report(const SizingInputs& in) {
  in.validate();
  SizingReport r;
  r.contact_length_L = contact_length(in.t_initial, in.t_final, in.roll_diameter_D, in.contact_mode);
  r.contact_area_A = in.width_w * r.contact_length_L;
  r.force_F = in.sigma_y * r.contact_area_A;
  r.torque_T = roll_torque(r.force_F, in.roll_diameter_D);
  r.omega = roll_angular_velocity(in.line_speed_v, in.roll_diameter_D);
  r.roll_rpm = rad_per_s_to_rpm(r.omega);
  r.power_P = motor_power(r.torque_T, r.omega);
  if (r.roll_rpm > 0.0) r.gear_ratio_R = gear_ratio(in.motor_rpm, r.roll_rpm);
  const double rounded_rpm = std::round(r.roll_rpm);
  if (rounded_rpm > 0.0) r.gear_ratio_rounded = gear_ratio(in.motor_rpm, rounded_rpm);
  r.vfd_frequency = vfd_frequency(in.motor_rpm, in.motor_poles);
  return r;
}

}  // namespace rollsim
