#pragma once

#include <complex>
#include <vector>

#include "rollsim/lti/polynomial.hpp"

namespace rollsim {

/// Proper SISO rational transfer function num(s)/den(s).
///
/// Construction normalizes the denominator to be monic and scales the
/// numerator by the same factor. Improper systems (deg num > deg den) and zero
/// denominators are rejected with InvalidArgument.
class TransferFunction {
 public:
  TransferFunction(Polynomial num, Polynomial den);

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }
  [[nodiscard]] int order() const { return den_.degree(); }
  [[nodiscard]] bool strictly_proper() const {
    return num_.is_zero() || num_.degree() < den_.degree();
  }

  [[nodiscard]] std::complex<double> operator()(std::complex<double> s) const {
    return num_(s) / den_(s);
  }

  friend bool operator==(const TransferFunction&, const TransferFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Builds a transfer function from descending-power coefficient lists.
TransferFunction tf_new(std::vector<double> num, std::vector<double> den);

/// Series connection a(s)·b(s). No pole/zero cancellation.
TransferFunction series(const TransferFunction& a, const TransferFunction& b);

/// Steady-state gain num(0)/den(0).
///
/// Returns +/-infinity for a pole at the origin with nonzero num(0) and throws
/// DomainError for the indeterminate 0/0 case.
double dc_gain(const TransferFunction& tf);

}  // namespace rollsim
