#pragma once

#include <complex>
#include <vector>

#include "rollsim/lti/polynomial.hpp"
#include "rollsim/lti/transfer_function.hpp"

namespace rollsim {

/// All complex roots of p, sorted by (real, imag).
///
/// The roots are eigenvalues of the balanced companion matrix, found with a
/// Francis double-shift QR iteration and then polished with Newton steps on
/// the polynomial itself. Throws ConvergenceError if the QR sweep stalls.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

/// Roots of the denominator. Requires deg(den) >= 1.
std::vector<std::complex<double>> poles(const TransferFunction& tf);

/// |p(root)| evaluated on the monic form of p.
double root_residual(const Polynomial& p, std::complex<double> root);

}  // namespace rollsim
