#pragma once

#include <map>

#include "anc/chain_network.hpp"
#include "anc/gains.hpp"
#include "anc/polynomial.hpp"

namespace anc {

// P(u) with P(cos l) = |sum_d h_d e^{-i d l}|^2 for all l, built from the tap
// autocorrelation: r_0 + 2 sum_{g>=1} r_g T_g(u), r_g = sum_d h_d h_{d+g}.
CosinePolynomial squared_magnitude_poly(const std::map<int, double>& taps);

// Rational spectral function f(u) = snr_scale * numerator(u) / denominator(u)
// with snr_scale = P_s / sigma^2. combined = denominator + snr_scale *
// numerator, so that 1 + f(u) = combined(u) / denominator(u). On [-1, 1] the
// numerator is a squared magnitude (>= 0) and the denominator is 1 plus a sum
// of squared magnitudes (>= 1), which make f nonnegative and bounded.
struct SpectralRatio {
  CosinePolynomial numerator;
  CosinePolynomial denominator;
  CosinePolynomial combined;
  double snr_scale = 0.0;
};

// Validates numerator >= 0 and denominator >= 1 on a 1024-point grid plus
// endpoints (up to rounding slack) and caches the combined polynomial.
SpectralRatio make_spectral_ratio(CosinePolynomial numerator, CosinePolynomial denominator,
                                  double snr_scale);

// numerator from the source tap profile, denominator = 1 + sum over relays of
// the squared-magnitude polynomial of that relay's noise taps.
SpectralRatio build_spectral_ratio(const ChainNetwork& net, const ScalingVector& beta);

// f(u); >= 0 on [-1, 1]
double eval_snr(const SpectralRatio& sr, double u);

// d/du ln(1 + f(u)) = C'(u)/C(u) - B'(u)/B(u)
double eval_dlog1p_snr(const SpectralRatio& sr, double u);

}  // namespace anc
