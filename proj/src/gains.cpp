#include "anc/gains.hpp"

#include <cmath>
#include <stdexcept>

namespace anc {

namespace {

// Per-delay taps of the signal received at `target` when a unit impulse is
// injected at `origin` (as a source symbol for origin 0, as receiver noise
// for a relay origin). Each relay hop shifts delay by one; edges do not.
std::map<int, double> propagate_taps(const ChainNetwork& net, const ScalingVector& beta,
                                     int origin, int target) {
  // transmit[v]: delay -> coefficient of the impulse in x_v[n]
  std::vector<std::map<int, double>> transmit(static_cast<size_t>(target));
  if (origin == net.source()) {
    transmit[0][0] = 1.0;
  } else {
    // noise enters y_origin at delay 0 and is retransmitted one step later
    transmit[static_cast<size_t>(origin)][1] = beta[static_cast<size_t>(origin - 1)];
  }

  std::map<int, double> received;
  for (int v = origin + 1; v <= target; ++v) {
    received.clear();
    for (int j : net.upstream_neighbors(v)) {
      if (j < origin) continue;
      const double h = net.gain(j, v);
      if (h == 0.0) continue;
      for (const auto& [d, c] : transmit[static_cast<size_t>(j)]) received[d] += h * c;
    }
    if (v == target) break;
    auto& tv = transmit[static_cast<size_t>(v)];
    const double b = beta[static_cast<size_t>(v - 1)];
    for (const auto& [d, c] : received) tv[d + 1] = b * c;
  }
  return received;
}

void check_target_and_beta(const ChainNetwork& net, const ScalingVector& beta, int target,
                           const char* who) {
  if (target < 1 || target > net.destination())
    throw std::invalid_argument(std::string(who) + ": target out of range");
  if (static_cast<int>(beta.size()) < target - 1)
    throw std::invalid_argument(std::string(who) +
                                ": beta must cover every relay upstream of target");
}

}  // namespace

DelayProfile modified_gains(const ChainNetwork& net, const ScalingVector& beta, int target) {
  check_target_and_beta(net, beta, target, "modified_gains");
  DelayProfile profile;
  profile.target = target;
  profile.source_taps = propagate_taps(net, beta, net.source(), target);
  profile.noise_taps.resize(static_cast<size_t>(target - 1));
  for (int m = 1; m < target; ++m)
    profile.noise_taps[static_cast<size_t>(m - 1)] = propagate_taps(net, beta, m, target);
  return profile;
}

double received_power(const ChainNetwork& net, const ScalingVector& beta, int node) {
  check_target_and_beta(net, beta, node, "received_power");
  const DelayProfile profile = modified_gains(net, beta, node);
  double signal = 0.0;
  for (const auto& [d, h] : profile.source_taps) signal += h * h;
  double forwarded_noise = 0.0;
  for (const auto& taps : profile.noise_taps)
    for (const auto& [d, h] : taps) forwarded_noise += h * h;
  // i.i.d. source symbols and mutually independent noises: powers add
  return net.source_power() * signal + net.noise_var() * forwarded_noise + net.noise_var();
}

double beta_max(const ChainNetwork& net, const ScalingVector& beta_prefix, int node) {
  if (node < 1 || node > net.n_relays())
    throw std::invalid_argument("beta_max: relay index out of range");
  return std::sqrt(net.relay_power(node) / received_power(net, beta_prefix, node));
}

bool is_feasible(const ChainNetwork& net, const ScalingVector& beta, double tol) {
  if (static_cast<int>(beta.size()) != net.n_relays()) return false;
  for (int i = 1; i <= net.n_relays(); ++i) {
    const double b = beta[static_cast<size_t>(i - 1)];
    if (!(b >= 0.0) || !std::isfinite(b)) return false;
    if (b > beta_max(net, beta, i) + tol) return false;
  }
  return true;
}

ScalingVector beta_from_theta(const ChainNetwork& net, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != net.n_relays())
    throw std::invalid_argument("beta_from_theta: need one theta per relay");
  ScalingVector beta;
  beta.reserve(theta.size());
  for (int i = 1; i <= net.n_relays(); ++i) {
    const double t = theta[static_cast<size_t>(i - 1)];
    if (!(t >= 0.0 && t <= 1.0))
      throw std::invalid_argument("beta_from_theta: theta entries must lie in [0, 1]");
    beta.push_back(t * beta_max(net, beta, i));
  }
  return beta;
}

}  // namespace anc
