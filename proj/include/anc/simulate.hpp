#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "anc/chain_network.hpp"
#include "anc/gains.hpp"

namespace anc {

// Discrete-time signal-level simulation of the chain: y_i[n] is the noisy sum
// received at node i and each relay retransmits x_i[n+1] = beta_i * y_i[n].
struct SimOptions {
  enum class Source { off, impulse, gaussian };

  int horizon = 0;
  std::uint64_t seed = 0;
  Source source = Source::off;
  int impulse_relay = 0;                     // 0 = none; m injects z_m[n] = delta[n]
  std::vector<std::uint8_t> noise_enabled;   // size N+2; entries 1..N+1 used; empty = all off
};

struct Transcript {
  // x[node][n] transmitted, y[node][n] received; x[0] holds source symbols,
  // y[0] is unused and stays zero.
  std::vector<std::vector<double>> x;
  std::vector<std::vector<double>> y;
};

Transcript simulate(const ChainNetwork& net, const ScalingVector& beta, const SimOptions& opts);

// Noise-free unit impulse injected at the origin (0 = source symbol,
// m = relay-m noise); returns the nonzero taps of y at the destination,
// keyed by delay. These are the per-delay aggregate channel gains.
std::map<int, double> impulse_response(const ChainNetwork& net, const ScalingVector& beta,
                                       int origin);

struct PowerEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

enum class PowerKind { received, transmit };

// Monte Carlo estimate of E[y_node^2] (or E[x_node^2]) under an i.i.d.
// Gaussian source with every noise source enabled; the first N+1 samples are
// discarded as warm-up and the standard error comes from batch means, which
// stay honest under the serial correlation the ISI taps introduce.
PowerEstimate estimate_power(const ChainNetwork& net, const ScalingVector& beta, int node,
                             std::int64_t samples, std::uint64_t seed,
                             PowerKind kind = PowerKind::received);

}  // namespace anc
