#include "anc/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace anc {

CosinePolynomial squared_magnitude_poly(const std::map<int, double>& taps) {
  if (taps.empty()) return CosinePolynomial();
  std::vector<int> delays;
  std::vector<double> h;
  delays.reserve(taps.size());
  h.reserve(taps.size());
  for (const auto& [d, v] : taps) {
    delays.push_back(d);
    h.push_back(v);
  }

  // autocorrelation over delay gaps; |H|^2 = r_0 + 2 sum_{g>0} r_g cos(g*lambda)
  const int max_gap = delays.back() - delays.front();
  std::vector<double> r(static_cast<size_t>(max_gap) + 1, 0.0);
  for (size_t a = 0; a < delays.size(); ++a)
    for (size_t b = a; b < delays.size(); ++b)
      r[static_cast<size_t>(delays[b] - delays[a])] += h[a] * h[b];

  CosinePolynomial out = CosinePolynomial::constant(r[0]);
  for (int g = 1; g <= max_gap; ++g) {
    if (r[static_cast<size_t>(g)] == 0.0) continue;
    out += CosinePolynomial::chebyshev_t(g).scaled(2.0 * r[static_cast<size_t>(g)]);
  }
  return out;
}

SpectralRatio make_spectral_ratio(CosinePolynomial numerator, CosinePolynomial denominator,
                                  double snr_scale) {
  if (!(snr_scale >= 0.0) || !std::isfinite(snr_scale))
    throw std::invalid_argument("make_spectral_ratio: snr_scale must be finite and >= 0");

  const double num_slack = 1e-9 * std::max(1.0, numerator.max_abs_coeff());
  const double den_slack = 1e-9 * std::max(1.0, denominator.max_abs_coeff());
  const int kGrid = 1024;
  for (int i = 0; i <= kGrid; ++i) {
    const double u = -1.0 + 2.0 * static_cast<double>(i) / kGrid;
    if (numerator(u) < -num_slack)
      throw std::invalid_argument("make_spectral_ratio: numerator negative on [-1,1]");
    if (denominator(u) < 1.0 - den_slack)
      throw std::invalid_argument("make_spectral_ratio: denominator below 1 on [-1,1]");
  }

  SpectralRatio sr;
  sr.combined = denominator + numerator.scaled(snr_scale);
  sr.numerator = std::move(numerator);
  sr.denominator = std::move(denominator);
  sr.snr_scale = snr_scale;
  return sr;
}

SpectralRatio build_spectral_ratio(const ChainNetwork& net, const ScalingVector& beta) {
  const DelayProfile profile = modified_gains(net, beta, net.destination());
  CosinePolynomial numerator = squared_magnitude_poly(profile.source_taps);
  CosinePolynomial denominator = CosinePolynomial::constant(1.0);
  for (const auto& taps : profile.noise_taps) denominator += squared_magnitude_poly(taps);
  return make_spectral_ratio(std::move(numerator), std::move(denominator),
                             net.source_power() / net.noise_var());
}

double eval_snr(const SpectralRatio& sr, double u) {
  return sr.snr_scale * sr.numerator(u) / sr.denominator(u);
}

double eval_dlog1p_snr(const SpectralRatio& sr, double u) {
  return sr.combined.derivative()(u) / sr.combined(u) -
         sr.denominator.derivative()(u) / sr.denominator(u);
}

}  // namespace anc
