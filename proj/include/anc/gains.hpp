#pragma once

#include <map>
#include <vector>

#include "anc/chain_network.hpp"

namespace anc {

// Per-relay amplification factors beta_1..beta_N (index m-1). Feasibility is
// nested: the bound on beta_m depends on beta_1..beta_{m-1}.
using ScalingVector = std::vector<double>;

// Aggregate per-delay channel gains seen at `target`:
//   source_taps[d]      multiplies x_s[n-d] in the signal received at target
//   noise_taps[m-1][d]  multiplies z_m[n-d], for every relay m < target
struct DelayProfile {
  int target = 0;
  std::map<int, double> source_taps;
  std::vector<std::map<int, double>> noise_taps;
};

// Dynamic-programming accumulation over the DAG, one retransmission delay per
// relay hop. target = N+1 gives the source-destination ISI representation.
// beta must cover every relay strictly upstream of target.
DelayProfile modified_gains(const ChainNetwork& net, const ScalingVector& beta, int target);

// P_R at `node` = P_s * sum_d h_d^2 + sigma^2 * sum_{m<node} sum_d h_{m,d}^2
// + sigma^2 (own receiver noise); depends only on beta entries before node.
double received_power(const ChainNetwork& net, const ScalingVector& beta, int node);

// Largest feasible scaling at `node`: sqrt(P_node / P_R(node)).
double beta_max(const ChainNetwork& net, const ScalingVector& beta_prefix, int node);

// Nested bounds evaluated in index order: 0 <= beta_m <= beta_max(m) + tol.
bool is_feasible(const ChainNetwork& net, const ScalingVector& beta, double tol = 1e-12);

// theta in [0,1]^N mapped through the nested bounds in index order:
// beta_i = theta_i * beta_max(net, beta_{<i}, i).
ScalingVector beta_from_theta(const ChainNetwork& net, const std::vector<double>& theta);

}  // namespace anc
