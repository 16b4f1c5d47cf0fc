#pragma once

#include <string_view>

#include "rollsim/lti/transfer_function.hpp"

namespace rollsim {

/// Roll drive motor and roller geometry.
///
/// The defaults are unit-normalized placeholders (no measured motor data is
/// available); r = 0.125 m follows from the 0.25 m roll diameter.
struct RollDriveParams {
  double K = 1.0;      ///< motor constant
  double J = 1.0;      ///< moment of inertia, kg·m²
  double B = 1.0;      ///< damping, N·m·s/rad
  double r = 0.125;    ///< roller radius, m

  void validate() const;
  friend bool operator==(const RollDriveParams&, const RollDriveParams&) = default;
};

/// Gap-adjusting power screw and its motor. Defaults are placeholders.
struct PowerScrewParams {
  double K_ps = 1.0;
  double J_ps = 1.0;
  double B_ps = 1.0;
  double lead = 0.005;  ///< linear travel per screw revolution, m

  void validate() const;
  friend bool operator==(const PowerScrewParams&, const PowerScrewParams&) = default;
};

/// How screw rotation maps to gap displacement.
///
/// direct scales the screw angular velocity directly, giving a
/// first-order plant. integrated adds the 1/s that turns angular velocity
/// into angle, so displacement is a type-1 response to voltage.
enum class KinematicsMode { direct, integrated };

const char* to_string(KinematicsMode m);
KinematicsMode kinematics_mode_from_string(std::string_view s);

/// Sheet speed per unit motor voltage: r·K/(J s + B).
TransferFunction roll_drive_tf(const RollDriveParams& p);

/// Gap displacement per unit screw-motor voltage.
TransferFunction power_screw_tf(const PowerScrewParams& p,
                                KinematicsMode mode = KinematicsMode::integrated);

/// The fixed 8th-order multibody plant 1/(s^8 + 3.571 s^6 + 1).
TransferFunction multibody_tf();

}  // namespace rollsim
