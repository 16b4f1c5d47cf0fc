#include "rollsim/lti/routh.hpp"

#include <algorithm>

#include "rollsim/error.hpp"

namespace rollsim {

std::vector<std::vector<double>> routh_array(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Routh array of the zero polynomial");
  const Polynomial q = p.leading() < 0 ? -p : p;
  const auto c = q.coeffs();
  const std::size_t width = c.size() / 2 + 1;

  std::vector<std::vector<double>> rows;
  std::vector<double> r0(width, 0.0);
  std::vector<double> r1(width, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? r0 : r1)[i / 2] = c[i];
  rows.push_back(std::move(r0));
  if (q.degree() == 0) return rows;
  rows.push_back(std::move(r1));

  for (int k = 2; k <= q.degree(); ++k) {
    const auto& above = rows[static_cast<std::size_t>(k) - 1];
    const auto& two_above = rows[static_cast<std::size_t>(k) - 2];
    if (above[0] == 0.0) break;
    std::vector<double> next(width, 0.0);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (above[0] * two_above[j + 1] - two_above[0] * above[j + 1]) / above[0];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

RouthClass routh_classification(const Polynomial& p) {
  if (p.degree() < 1) throw InvalidArgument("Routh classification requires degree >= 1");
  const Polynomial q = p.leading() < 0 ? -p : p;
  // Necessary condition: every coefficient strictly positive.
  const auto c = q.coeffs();
  if (std::any_of(c.begin(), c.end(), [](double v) { return v <= 0.0; })) {
    return RouthClass::not_hurwitz;
  }
  const auto rows = routh_array(q);
  if (static_cast<int>(rows.size()) != q.degree() + 1) return RouthClass::not_hurwitz;
  for (const auto& row : rows) {
    if (!(row[0] > 0.0)) return RouthClass::not_hurwitz;
  }
  return RouthClass::hurwitz_stable;
}

const char* to_string(RouthClass c) {
  return c == RouthClass::hurwitz_stable ? "hurwitz_stable" : "not_hurwitz";
}

}  // namespace rollsim
