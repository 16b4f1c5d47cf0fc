#pragma once

#include "rollsim/lti/polynomial.hpp"
#include "rollsim/lti/transfer_function.hpp"

namespace rollsim {

/// den_C·den_G + num_C·num_G for unity negative feedback.
Polynomial characteristic_polynomial(const Polynomial& num_c, const Polynomial& den_c,
                                     const TransferFunction& plant);

/// T(s) = C G / (1 + C G) by polynomial arithmetic. Common factors are kept,
/// so the order of T is deg(den_C) + deg(den_G).
TransferFunction closed_loop_tf(const TransferFunction& controller, const TransferFunction& plant);

/// Same, for a controller given as (possibly improper) polynomials.
TransferFunction closed_loop_tf(const Polynomial& num_c, const Polynomial& den_c,
                                const TransferFunction& plant);

}  // namespace rollsim
