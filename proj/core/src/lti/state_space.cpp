#include "rollsim/lti/state_space.hpp"

namespace rollsim {

StateSpaceModel tf_to_state_space(const TransferFunction& tf) {
  const int n = tf.order();
  const Polynomial& den = tf.den();  // monic
  const Polynomial& num = tf.num();

  StateSpaceModel ss;
  ss.A = Eigen::MatrixXd::Zero(n, n);
  ss.B = Eigen::VectorXd::Zero(n);
  ss.C = Eigen::RowVectorXd::Zero(n);

  // b_i is the coefficient of s^(n-i); a_i likewise for the denominator.
  const double b0 = num.coeff_of_power(n);
  ss.D = b0;
  for (int i = 1; i <= n; ++i) {
    const double a_i = den.coeff_of_power(n - i);
    const double b_i = num.coeff_of_power(n - i);
    ss.A(0, i - 1) = -a_i;
    ss.C(i - 1) = b_i - a_i * b0;
  }
  for (int i = 1; i < n; ++i) ss.A(i, i - 1) = 1.0;
  if (n > 0) ss.B(0) = 1.0;
  return ss;
}

}  // namespace rollsim
