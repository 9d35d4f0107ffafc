#include "anc/roots.hpp"

#include <algorithm>
#include <cmath>

namespace anc {

namespace {

constexpr double kDedupeTol = 1e-11;

double bisect(const CosinePolynomial& p, double a, double b, double pa) {
  // sign change guaranteed by the caller
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    const double mid = 0.5 * (a + b);
    const double pm = p(mid);
    if (pm == 0.0) return mid;
    if ((pa < 0.0) == (pm < 0.0)) {
      a = mid;
      pa = pm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

double newton_polish(const CosinePolynomial& p, const CosinePolynomial& dp, double x, double lo,
                     double hi) {
  const double d = dp(x);
  if (d == 0.0) return x;
  const double x1 = x - p(x) / d;
  if (x1 > lo && x1 < hi && std::fabs(p(x1)) <= std::fabs(p(x))) return x1;
  return x;
}

void real_roots_rec(const CosinePolynomial& p, double lo, double hi, double scale,
                    std::vector<double>& out) {
  const int deg = p.degree();
  if (deg < 1) return;
  if (deg == 1) {
    const double x = -p.coeff(0) / p.coeff(1);
    if (x > lo && x < hi) out.push_back(x);
    return;
  }

  const CosinePolynomial dp = p.derivative();
  std::vector<double> crit;
  real_roots_rec(dp, lo, hi, dp.max_abs_coeff(), crit);
  std::sort(crit.begin(), crit.end());

  // p is monotone between consecutive breakpoints: bisect each sign change,
  // and keep critical points where p itself (numerically) vanishes, which
  // covers even-multiplicity roots.
  std::vector<double> breaks;
  breaks.push_back(lo);
  for (double c : crit) breaks.push_back(c);
  breaks.push_back(hi);

  const double zero_tol = 1e-10 * std::max(scale, 1e-300);
  for (double c : crit)
    if (std::fabs(p(c)) <= zero_tol) out.push_back(c);

  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (!(b > a)) continue;
    const double pa = p(a), pb = p(b);
    if (pa == 0.0) {
      if (a > lo) out.push_back(a);
      continue;
    }
    if ((pa < 0.0) != (pb < 0.0)) {
      double x = bisect(p, a, b, pa);
      x = newton_polish(p, dp, x, lo, hi);
      if (x > lo && x < hi) out.push_back(x);
    }
  }
}

}  // namespace

std::vector<double> real_roots_in_interval(const CosinePolynomial& p, double lo, double hi) {
  std::vector<double> roots;
  if (!(lo < hi)) return roots;
  const double scale = p.max_abs_coeff();
  if (p.degree() < 1 || scale <= 1e-300) return roots;
  real_roots_rec(p, lo, hi, scale, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::fabs(a - b) <= kDedupeTol; }),
              roots.end());
  return roots;
}

}  // namespace anc
