#include "anc/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace anc {

CosinePolynomial::CosinePolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  for (double c : c_)
    if (!std::isfinite(c)) throw std::invalid_argument("CosinePolynomial: non-finite coefficient");
  trim();
}

CosinePolynomial CosinePolynomial::constant(double c) { return CosinePolynomial({c}); }

CosinePolynomial CosinePolynomial::chebyshev_t(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_t: order must be >= 0");
  std::vector<double> prev = {1.0};       // T_0
  if (n == 0) return CosinePolynomial(prev);
  std::vector<double> cur = {0.0, 1.0};   // T_1
  for (int i = 1; i < n; ++i) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return CosinePolynomial(cur);
}

void CosinePolynomial::trim() {
  while (!c_.empty() && std::fabs(c_.back()) <= kTrimTol) c_.pop_back();
}

double CosinePolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : c_) m = std::max(m, std::fabs(c));
  return m;
}

double CosinePolynomial::operator()(double u) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i];
  return acc;
}

CosinePolynomial CosinePolynomial::derivative() const {
  if (c_.size() <= 1) return CosinePolynomial();
  std::vector<double> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return CosinePolynomial(std::move(d));
}

CosinePolynomial& CosinePolynomial::operator+=(const CosinePolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
  for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

CosinePolynomial CosinePolynomial::scaled(double s) const {
  std::vector<double> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = s * c_[i];
  return CosinePolynomial(std::move(out));
}

CosinePolynomial operator+(CosinePolynomial lhs, const CosinePolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

CosinePolynomial operator-(const CosinePolynomial& lhs, const CosinePolynomial& rhs) {
  return lhs + rhs.scaled(-1.0);
}

CosinePolynomial operator*(const CosinePolynomial& lhs, const CosinePolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return CosinePolynomial();
  std::vector<double> out(lhs.c_.size() + rhs.c_.size() - 1, 0.0);
  for (size_t i = 0; i < lhs.c_.size(); ++i)
    for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
  return CosinePolynomial(std::move(out));
}

}  // namespace anc
