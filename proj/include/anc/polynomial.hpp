#pragma once

#include <vector>

namespace anc {

// Dense power-basis polynomial c_0 + c_1 u + ... + c_D u^D evaluated on
// [-1, 1], where u stands for cos(lambda). Trailing coefficients at or below
// kTrimTol (absolute) are trimmed so degree() reflects the true degree; the
// zero polynomial has an empty coefficient vector and degree -1.
class CosinePolynomial {
 public:
  static constexpr double kTrimTol = 1e-14;

  CosinePolynomial() = default;
  explicit CosinePolynomial(std::vector<double> coeffs);

  static CosinePolynomial constant(double c);
  // Chebyshev polynomial of the first kind T_n expanded in the power basis,
  // via T_{n+1} = 2 u T_n - T_{n-1}.
  static CosinePolynomial chebyshev_t(int n);

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  double coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0.0;
  }
  double max_abs_coeff() const;

  double operator()(double u) const;  // Horner
  CosinePolynomial derivative() const;

  CosinePolynomial& operator+=(const CosinePolynomial& rhs);
  CosinePolynomial scaled(double s) const;

  friend CosinePolynomial operator+(CosinePolynomial lhs, const CosinePolynomial& rhs);
  friend CosinePolynomial operator-(const CosinePolynomial& lhs, const CosinePolynomial& rhs);
  friend CosinePolynomial operator*(const CosinePolynomial& lhs, const CosinePolynomial& rhs);

 private:
  void trim();
  std::vector<double> c_;
};

}  // namespace anc
