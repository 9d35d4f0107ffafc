#pragma once

#include <stdexcept>

#include "anc/spectrum.hpp"

namespace anc {

// Raised when the adaptive quadrature hits the node cap without converging.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rate and chord slope of the straight line through the endpoint values of
// log2(1 + f(u)), both in bits/channel use.
struct ZerothOrder {
  double rate = 0.0;
  double slope = 0.0;
};

// Tangent-line bounds with slope equal to the chord slope; u_min/u_max are
// the abscissae where log2(1+f(u)) - s*u attains its extrema.
struct TangentBounds {
  double lower = 0.0;
  double upper = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
  bool grid_fallback = false;  // root isolation failed; extrema from a dense grid
};

struct RateReport {
  double exact = 0.0;
  double zeroth = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double slope = 0.0;
  double u_max = 0.0;
  double u_min = 0.0;
  double quad_tol = 0.0;
};

// (1/2pi) integral over [-1,1] of log2(1+f(u)) / sqrt(1-u^2) du by
// Gauss-Chebyshev quadrature (nodes cos((2j-1)pi/2n), equal weights pi/n),
// doubling n until successive estimates differ by less than tol.
double exact_rate(const SpectralRatio& sr, double tol);

// rate = (1/4) log2[(1+f(1))(1+f(-1))], slope = (1/2) log2[(1+f(1))/(1+f(-1))]
ZerothOrder zeroth_rate(const SpectralRatio& sr);

// Candidate tangency points are the endpoints plus the real roots of the
// cleared-denominator form of d/du log2(1+f(u)) = s inside (-1, 1).
TangentBounds tangent_bounds(const SpectralRatio& sr);

RateReport rate_report(const SpectralRatio& sr, double quad_tol);

}  // namespace anc
