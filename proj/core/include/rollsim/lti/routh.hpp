#pragma once

#include <vector>

#include "rollsim/lti/polynomial.hpp"

namespace rollsim {

enum class RouthClass { hurwitz_stable, not_hurwitz };

/// Routh array of p, one row per power from s^n down to s^0.
///
/// Construction stops early (rows are left out) at the first zero pivot.
std::vector<std::vector<double>> routh_array(const Polynomial& p);

/// hurwitz_stable iff every first-column entry of the Routh array is
/// strictly positive. A zero pivot or a nonpositive coefficient is reported
/// as not_hurwitz without epsilon substitution. Sign of p is normalized first.
RouthClass routh_classification(const Polynomial& p);

const char* to_string(RouthClass c);

}  // namespace rollsim
