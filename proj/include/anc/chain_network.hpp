#pragma once

#include <vector>

#include "anc/rng.hpp"

namespace anc {

// (N,k) chain relay network. Node 0 is the source, nodes 1..N are
// amplify-and-forward relays, node N+1 is the destination. A directed edge
// j->i exists exactly when 1 <= i-j <= k. Every receiving node sees i.i.d.
// Gaussian noise of variance noise_var; the source transmits i.i.d. Gaussian
// symbols of power source_power and relay i is budgeted to relay_power(i).
class ChainNetwork {
 public:
  ChainNetwork(int n_relays, int k, double noise_var, double source_power,
               std::vector<double> relay_powers);
  ChainNetwork(int n_relays, int k, double noise_var, double source_power, double relay_power);

  int n_relays() const { return n_relays_; }
  int reach() const { return k_; }
  int node_count() const { return n_relays_ + 2; }
  int source() const { return 0; }
  int destination() const { return n_relays_ + 1; }

  double noise_var() const { return noise_var_; }
  double source_power() const { return source_power_; }
  double relay_power(int i) const;  // i in 1..N

  bool valid_node(int i) const { return i >= 0 && i <= n_relays_ + 1; }
  bool has_edge(int from, int to) const {
    return from >= 0 && to <= n_relays_ + 1 && from < to && to - from <= k_;
  }

  double gain(int from, int to) const;        // throws on a non-edge
  void set_gain(int from, int to, double h);  // throws on a non-edge

  // {i+1, ..., min(i+k, N+1)}; empty for the destination
  std::vector<int> forward_neighbors(int i) const;
  // {max(0, i-k), ..., i-1}; empty for the source
  std::vector<int> upstream_neighbors(int i) const;

  // i.i.d. draw for every edge, in (from, to) lexicographic order
  void sample_gains_normal(double mean, double stddev, Rng& rng);
  void sample_gains_uniform(double lo, double hi, Rng& rng);

  // all outgoing edges of each transmitting node share a single gain value
  bool has_equal_outgoing_gains(double rel_tol = 1e-12) const;

 private:
  int index(int from, int to) const { return from * (n_relays_ + 2) + to; }
  void check_edge(int from, int to) const;

  int n_relays_ = 0;
  int k_ = 0;
  double noise_var_ = 1.0;
  double source_power_ = 1.0;
  std::vector<double> relay_powers_;
  std::vector<double> gains_;  // dense (N+2)^2, zero off-edge
};

}  // namespace anc
