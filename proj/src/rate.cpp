#include "anc/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "anc/roots.hpp"

namespace anc {

namespace {

inline double log2_1p(double x) { return std::log1p(x) * std::numbers::log2e; }

// log2(1 + f(u)) - slope * u; its extrema locate the tangency points
inline double detrended_log_term(const SpectralRatio& sr, double slope, double u) {
  return log2_1p(eval_snr(sr, u)) - slope * u;
}

}  // namespace

double exact_rate(const SpectralRatio& sr, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("exact_rate: tol must be > 0");
  constexpr int kMaxNodes = 1 << 16;

  const auto estimate = [&sr](int nodes) {
    double sum = 0.0;
    for (int j = 1; j <= nodes; ++j) {
      const double u = std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * nodes));
      sum += log2_1p(eval_snr(sr, u));
    }
    // (1/2pi) * (pi/n) * sum
    return sum / (2.0 * nodes);
  };

  int nodes = 8;
  double prev = estimate(nodes);
  while (nodes < kMaxNodes) {
    nodes *= 2;
    const double cur = estimate(nodes);
    if (std::fabs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw QuadratureError("exact_rate: quadrature did not converge within 65536 nodes");
}

ZerothOrder zeroth_rate(const SpectralRatio& sr) {
  const double hi = log2_1p(eval_snr(sr, 1.0));
  const double lo = log2_1p(eval_snr(sr, -1.0));
  // odd part integrates to zero under the Chebyshev weight
  return {0.25 * (hi + lo), 0.5 * (hi - lo)};
}

TangentBounds tangent_bounds(const SpectralRatio& sr) {
  const ZerothOrder z = zeroth_rate(sr);
  const double slope_nat = z.slope * std::numbers::ln2;  // chord slope in nats

  TangentBounds tb;
  std::vector<double> candidates = {-1.0, 1.0};

  // cleared-denominator form of d/du ln(1+f) = slope_nat:
  //   C'B - B'C - slope_nat * C B = 0
  const CosinePolynomial t1 = sr.combined.derivative() * sr.denominator;
  const CosinePolynomial t2 = sr.denominator.derivative() * sr.combined;
  const CosinePolynomial t3 = (sr.combined * sr.denominator).scaled(slope_nat);
  const CosinePolynomial q = t1 - t2 - t3;
  const double q_scale =
      std::max({t1.max_abs_coeff(), t2.max_abs_coeff(), t3.max_abs_coeff(), 1e-300});

  bool roots_ok = true;
  if (q.max_abs_coeff() > 1e-13 * q_scale) {
    const std::vector<double> roots = real_roots_in_interval(q, -1.0, 1.0);
    for (double r : roots) {
      if (std::isfinite(r))
        candidates.push_back(r);
      else
        roots_ok = false;
    }
  }

  double best_max = -std::numeric_limits<double>::infinity();
  double best_min = std::numeric_limits<double>::infinity();
  for (double u : candidates) {
    const double phi = detrended_log_term(sr, z.slope, u);
    if (!std::isfinite(phi)) {
      roots_ok = false;
      break;
    }
    if (phi > best_max) {
      best_max = phi;
      tb.u_max = u;
    }
    if (phi < best_min) {
      best_min = phi;
      tb.u_min = u;
    }
  }

  if (!roots_ok) {
    // dense-grid fallback; bounds are then only grid-accurate
    tb.grid_fallback = true;
    best_max = -std::numeric_limits<double>::infinity();
    best_min = std::numeric_limits<double>::infinity();
    const int kGrid = 4096;
    for (int i = 0; i <= kGrid; ++i) {
      const double u = -1.0 + 2.0 * static_cast<double>(i) / kGrid;
      const double phi = detrended_log_term(sr, z.slope, u);
      if (phi > best_max) {
        best_max = phi;
        tb.u_max = u;
      }
      if (phi < best_min) {
        best_min = phi;
        tb.u_min = u;
      }
    }
  }

  // integrating the tangent s*u + phi(u*) against the Chebyshev weight leaves
  // phi(u*)/2; clamp to the chord value so that rounding cannot break
  // lower <= zeroth <= upper when the extremum sits at an endpoint
  tb.upper = std::max(0.5 * best_max, z.rate);
  tb.lower = std::min(0.5 * best_min, z.rate);
  return tb;
}

RateReport rate_report(const SpectralRatio& sr, double quad_tol) {
  const ZerothOrder z = zeroth_rate(sr);
  const TangentBounds tb = tangent_bounds(sr);
  RateReport report;
  report.exact = exact_rate(sr, quad_tol);
  report.zeroth = z.rate;
  report.slope = z.slope;
  report.lower = tb.lower;
  report.upper = tb.upper;
  report.u_max = tb.u_max;
  report.u_min = tb.u_min;
  report.quad_tol = quad_tol;
  return report;
}

}  // namespace anc
