#include "rollsim/control/closed_loop.hpp"

#include "rollsim/error.hpp"

namespace rollsim {

Polynomial characteristic_polynomial(const Polynomial& num_c, const Polynomial& den_c,
                                     const TransferFunction& plant) {
  return den_c * plant.den() + num_c * plant.num();
}

TransferFunction closed_loop_tf(const Polynomial& num_c, const Polynomial& den_c,
                                const TransferFunction& plant) {
  if (den_c.is_zero()) throw InvalidArgument("controller denominator is zero");
  const Polynomial den = characteristic_polynomial(num_c, den_c, plant);
  if (den.is_zero()) throw InvalidArgument("closed-loop denominator vanished (1 + CG = 0)");
  return TransferFunction(num_c * plant.num(), den);
}

TransferFunction closed_loop_tf(const TransferFunction& controller, const TransferFunction& plant) {
  return closed_loop_tf(controller.num(), controller.den(), plant);
}

}  // namespace rollsim
