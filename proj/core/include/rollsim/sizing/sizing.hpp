#pragma once

#include <string_view>

namespace rollsim {

// Drive-train sizing for a two-high rolling stand, from material yield
// strength and pass geometry through to motor power, gear reduction and VFD
// supply frequency. SI units throughout.

enum class ContactLengthMode { approx, exact };

const char* to_string(ContactLengthMode m);
ContactLengthMode contact_length_mode_from_string(std::string_view s);

struct SizingInputs {
  double sigma_y = 0.0;          ///< yield strength, Pa
  double width_w = 0.0;          ///< sheet width, m
  double t_initial = 0.0;        ///< entry thickness, m
  double t_final = 0.0;          ///< exit thickness, m
  double roll_diameter_D = 0.0;  ///< m
  double line_speed_v = 0.0;     ///< m/s
  double motor_rpm = 0.0;
  int motor_poles = 4;
  ContactLengthMode contact_mode = ContactLengthMode::approx;

  /// Throws InvalidArgument naming the offending field.
  void validate() const;
  friend bool operator==(const SizingInputs&, const SizingInputs&) = default;
};

struct SizingReport {
  double contact_length_L = 0.0;  ///< m
  double contact_area_A = 0.0;    ///< m²
  double force_F = 0.0;           ///< N
  double torque_T = 0.0;          ///< N·m
  double omega = 0.0;             ///< roll angular velocity, rad/s
  double roll_rpm = 0.0;
  double power_P = 0.0;           ///< W
  double gear_ratio_R = 0.0;      ///< motor_rpm / roll_rpm, unrounded
  /// motor_rpm over the roll speed rounded to a whole rpm, the way hand
  /// calculations usually quote it.
  double gear_ratio_rounded = 0.0;
  double vfd_frequency = 0.0;     ///< Hz
};

/// Contact length of the deformation zone. approx: t_i - t_f;
/// exact: D·asin((t_i - t_f)/D). DomainError when (t_i - t_f)/D > 1.
double contact_length(double t_initial, double t_final, double roll_diameter,
                      ContactLengthMode mode = ContactLengthMode::approx);

/// F = sigma_y · w · L.
double compression_force(const SizingInputs& in);

double roll_torque(double force, double roll_diameter);
double roll_angular_velocity(double line_speed, double roll_diameter);
double rad_per_s_to_rpm(double omega);
double motor_power(double torque, double omega);
double gear_ratio(double motor_rpm, double roll_rpm);
/// Supply frequency giving rpm on a motor with the given pole count:
/// rpm·poles/120. Odd or non-positive pole counts are rejected.
double vfd_frequency(double rpm, int poles);
/// Inverse of vfd_frequency.
double synchronous_rpm(double frequency, int poles);

SizingReport size_report(const SizingInputs& in);

}  // namespace rollsim
