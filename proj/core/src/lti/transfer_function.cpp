#include "rollsim/lti/transfer_function.hpp"

#include <limits>

#include "rollsim/error.hpp"

namespace rollsim {

TransferFunction::TransferFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw InvalidArgument("transfer function denominator is zero");
  if (!num.is_zero() && num.degree() > den.degree()) {
    throw InvalidArgument("improper transfer function: deg(num) = " +
                          std::to_string(num.degree()) + " > deg(den) = " +
                          std::to_string(den.degree()));
  }
  const double scale = 1.0 / den.leading();
  num_ = scale * num;
  den_ = scale * den;
}

TransferFunction tf_new(std::vector<double> num, std::vector<double> den) {
  return TransferFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

TransferFunction series(const TransferFunction& a, const TransferFunction& b) {
  return TransferFunction(a.num() * b.num(), a.den() * b.den());
}

double dc_gain(const TransferFunction& tf) {
  const double n0 = tf.num().constant_term();
  const double d0 = tf.den().constant_term();
  if (d0 == 0.0) {
    if (n0 == 0.0) throw DomainError("dc gain is indeterminate (0/0)");
    return n0 > 0 ? std::numeric_limits<double>::infinity()
                  : -std::numeric_limits<double>::infinity();
  }
  return n0 / d0;
}

}  // namespace rollsim
