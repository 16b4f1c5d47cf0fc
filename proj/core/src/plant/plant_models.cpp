#include "rollsim/plant/plant_models.hpp"

#include <numbers>
#include <string>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw InvalidArgument(std::string(name) + " must be > 0");
}

}  // namespace

void RollDriveParams::validate() const {
  require_positive(K, "K");
  require_positive(J, "J");
  require_positive(B, "B");
  require_positive(r, "r");
}

void PowerScrewParams::validate() const {
  require_positive(K_ps, "K_ps");
  require_positive(J_ps, "J_ps");
  require_positive(B_ps, "B_ps");
  require_positive(lead, "lead");
}

const char* to_string(KinematicsMode m) {
  return m == KinematicsMode::direct ? "direct" : "integrated";
}

KinematicsMode kinematics_mode_from_string(std::string_view s) {
  if (s == "direct") return KinematicsMode::direct;
  if (s == "integrated") return KinematicsMode::integrated;
  throw InvalidArgument("unknown kinematics mode '" + std::string(s) + "'");
}

TransferFunction roll_drive_tf(const RollDriveParams& p) {
  p.validate();
  return TransferFunction(Polynomial{p.r * p.K}, Polynomial{p.J, p.B});
}

TransferFunction power_screw_tf(const PowerScrewParams& p, KinematicsMode mode) {
  p.validate();
  const double gain = p.lead * p.K_ps / (2.0 * std::numbers::pi);
  if (mode == KinematicsMode::direct) {
    return TransferFunction(Polynomial{gain}, Polynomial{p.J_ps, p.B_ps});
  }
  return TransferFunction(Polynomial{gain}, Polynomial{p.J_ps, p.B_ps, 0.0});
}

TransferFunction multibody_tf() {
  return TransferFunction(Polynomial{1.0}, Polynomial{1.0, 0.0, 3.571, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
}

}  // namespace rollsim
