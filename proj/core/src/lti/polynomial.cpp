#include "rollsim/lti/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rollsim/error.hpp"

namespace rollsim {

Polynomial::Polynomial(std::vector<double> descending) : coeffs_(std::move(descending)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw InvalidArgument("polynomial coefficient is not finite");
  }
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](double c) { return c != 0.0; });
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::monomial(double c, int k) {
  if (k < 0) throw InvalidArgument("negative monomial power");
  std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
  v[0] = c;
  return Polynomial(std::move(v));
}

double Polynomial::coeff_of_power(int power) const {
  if (power < 0 || power > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(degree() - power)];
}

double Polynomial::operator()(double s) const {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = coeffs_[i] * static_cast<double>(degree() - static_cast<int>(i));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InvalidArgument("zero polynomial has no monic form");
  return (1.0 / leading()) * *this;
}

std::string Polynomial::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double c = coeffs_[i];
    const int power = degree() - static_cast<int>(i);
    if (c == 0.0 && !is_zero()) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const double mag = std::abs(c);
    if (mag != 1.0 || power == 0) os << mag;
    if (power >= 1) os << var;
    if (power >= 2) os << '^' << power;
    first = false;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  std::vector<double> out(std::max(x.size(), y.size()), 0.0);
  const std::size_t ox = out.size() - x.size();
  const std::size_t oy = out.size() - y.size();
  for (std::size_t i = 0; i < x.size(); ++i) out[ox + i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[oy + i] += y[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0 * b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(double k, const Polynomial& p) {
  std::vector<double> out = p.coeffs_;
  for (double& c : out) c *= k;
  return Polynomial(std::move(out));
}

}  // namespace rollsim
