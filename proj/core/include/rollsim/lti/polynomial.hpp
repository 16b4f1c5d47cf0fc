#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rollsim {

/// Real polynomial in s, coefficients stored in descending powers.
///
/// coeffs()[0] is the leading coefficient. Leading zeros are stripped on
/// construction, so the leading coefficient is nonzero unless the polynomial
/// is the zero polynomial, which is stored as the single coefficient {0}.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> descending);
  Polynomial(std::initializer_list<double> descending)
      : Polynomial(std::vector<double>(descending)) {}

  static Polynomial constant(double c) { return Polynomial{c}; }
  /// The monomial s^k scaled by c.
  static Polynomial monomial(double c, int k);

  [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  [[nodiscard]] double leading() const { return coeffs_.front(); }
  [[nodiscard]] double constant_term() const { return coeffs_.back(); }
  /// Coefficient of s^power (zero when power exceeds the degree).
  [[nodiscard]] double coeff_of_power(int power) const;

  [[nodiscard]] double operator()(double s) const;
  [[nodiscard]] std::complex<double> operator()(std::complex<double> s) const;
  [[nodiscard]] Polynomial derivative() const;
  /// Scaled so the leading coefficient is 1. Throws on the zero polynomial.
  [[nodiscard]] Polynomial monic() const;

  [[nodiscard]] std::string to_string(char var = 's') const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double k, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p) { return -1.0 * p; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace rollsim
