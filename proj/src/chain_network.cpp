#include "anc/chain_network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace anc {

ChainNetwork::ChainNetwork(int n_relays, int k, double noise_var, double source_power,
                           std::vector<double> relay_powers)
    : n_relays_(n_relays),
      k_(k),
      noise_var_(noise_var),
      source_power_(source_power),
      relay_powers_(std::move(relay_powers)) {
  if (n_relays_ < 1) throw std::invalid_argument("ChainNetwork: n_relays must be >= 1");
  if (k_ < 1 || k_ > n_relays_ + 1)
    throw std::invalid_argument("ChainNetwork: k must lie in [1, n_relays+1]");
  if (!(noise_var_ > 0.0) || !std::isfinite(noise_var_))
    throw std::invalid_argument("ChainNetwork: noise_var must be finite and > 0");
  if (!(source_power_ > 0.0) || !std::isfinite(source_power_))
    throw std::invalid_argument("ChainNetwork: source_power must be finite and > 0");
  if (static_cast<int>(relay_powers_.size()) != n_relays_)
    throw std::invalid_argument("ChainNetwork: need one relay power per relay");
  for (double p : relay_powers_)
    if (!(p > 0.0) || !std::isfinite(p))
      throw std::invalid_argument("ChainNetwork: relay powers must be finite and > 0");
  gains_.assign(static_cast<size_t>(node_count()) * node_count(), 0.0);
}

ChainNetwork::ChainNetwork(int n_relays, int k, double noise_var, double source_power,
                           double relay_power)
    : ChainNetwork(n_relays, k, noise_var, source_power,
                   std::vector<double>(static_cast<size_t>(n_relays < 0 ? 0 : n_relays),
                                       relay_power)) {}

double ChainNetwork::relay_power(int i) const {
  if (i < 1 || i > n_relays_) throw std::invalid_argument("relay_power: relay index out of range");
  return relay_powers_[static_cast<size_t>(i - 1)];
}

void ChainNetwork::check_edge(int from, int to) const {
  if (!has_edge(from, to))
    throw std::invalid_argument("ChainNetwork: no edge " + std::to_string(from) + "->" +
                                std::to_string(to));
}

double ChainNetwork::gain(int from, int to) const {
  check_edge(from, to);
  return gains_[static_cast<size_t>(index(from, to))];
}

void ChainNetwork::set_gain(int from, int to, double h) {
  check_edge(from, to);
  if (!std::isfinite(h)) throw std::invalid_argument("set_gain: gain must be finite");
  gains_[static_cast<size_t>(index(from, to))] = h;
}

std::vector<int> ChainNetwork::forward_neighbors(int i) const {
  if (!valid_node(i)) throw std::invalid_argument("forward_neighbors: node out of range");
  std::vector<int> out;
  const int hi = std::min(i + k_, n_relays_ + 1);
  for (int j = i + 1; j <= hi; ++j) out.push_back(j);
  return out;
}

std::vector<int> ChainNetwork::upstream_neighbors(int i) const {
  if (!valid_node(i)) throw std::invalid_argument("upstream_neighbors: node out of range");
  std::vector<int> out;
  for (int j = std::max(0, i - k_); j < i; ++j) out.push_back(j);
  return out;
}

void ChainNetwork::sample_gains_normal(double mean, double stddev, Rng& rng) {
  if (!(stddev >= 0.0) || !std::isfinite(stddev) || !std::isfinite(mean))
    throw std::invalid_argument("sample_gains_normal: bad distribution parameters");
  for (int from = 0; from <= n_relays_; ++from)
    for (int to = from + 1; to <= std::min(from + k_, n_relays_ + 1); ++to)
      set_gain(from, to, rng.normal(mean, stddev));
}

void ChainNetwork::sample_gains_uniform(double lo, double hi, Rng& rng) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("sample_gains_uniform: bad distribution parameters");
  for (int from = 0; from <= n_relays_; ++from)
    for (int to = from + 1; to <= std::min(from + k_, n_relays_ + 1); ++to)
      set_gain(from, to, rng.uniform(lo, hi));
}

bool ChainNetwork::has_equal_outgoing_gains(double rel_tol) const {
  for (int from = 0; from <= n_relays_; ++from) {
    const auto fwd = forward_neighbors(from);
    if (fwd.size() < 2) continue;
    const double h0 = gain(from, fwd.front());
    for (int to : fwd) {
      const double h = gain(from, to);
      if (std::fabs(h - h0) > rel_tol * std::max(1.0, std::fabs(h0))) return false;
    }
  }
  return true;
}

}  // namespace anc
