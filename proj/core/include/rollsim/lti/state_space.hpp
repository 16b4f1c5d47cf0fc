#pragma once

#include <Eigen/Dense>

#include "rollsim/lti/transfer_function.hpp"

namespace rollsim {

/// SISO state-space realization dx/dt = A x + B u, y = C x + D u.
struct StateSpaceModel {
  Eigen::MatrixXd A;
  Eigen::VectorXd B;
  Eigen::RowVectorXd C;
  double D = 0.0;

  [[nodiscard]] Eigen::Index order() const { return A.rows(); }
  [[nodiscard]] double output(const Eigen::VectorXd& x, double u) const {
    return C.dot(x) + D * u;
  }
};

/// Controllable canonical form.
///
/// For den = s^n + a1 s^(n-1) + ... + an and numerator coefficients b0..bn
/// (padded to length n+1): the first row of A is [-a1 ... -an] with ones on
/// the subdiagonal, B = e1, C_i = b_i - a_i b0 and D = b0.
StateSpaceModel tf_to_state_space(const TransferFunction& tf);

}  // namespace rollsim
