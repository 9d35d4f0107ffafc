#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "anc/chain_network.hpp"

namespace anc {

// One directed path through the chain. Delay convention:
//   - paths leaving the source carry delay = number of relays on the path
//     (each relay retransmits one step later), i.e. edge count - 1;
//   - paths leaving a relay (noise injection point) carry delay = edge count,
//     since the injected noise is already one retransmission behind.
struct Path {
  std::vector<int> nodes;  // origin ... destination, strictly increasing
  int delay = 0;
};

using PathsByDelay = std::map<int, std::vector<Path>>;

// Exhaustive, duplicate-free enumeration of all origin->dest paths, grouped
// by delay. Requires origin < dest.
PathsByDelay enumerate_paths(const ChainNetwork& net, int origin, int dest);

// C(n,r), with the convention C(n,r) = 0 whenever n < 0, r < 0 or r > n.
std::int64_t binomial(std::int64_t n, std::int64_t r);

// Inclusion-exclusion count of source->destination paths with a given delay.
// Delays outside [floor(N/k), N] yield 0.
std::uint64_t count_source_paths(int n_relays, int k, int delay);

// Same for relay->destination paths; delays outside
// [floor((N-m)/k)+1, N-m+1] yield 0.
std::uint64_t count_relay_paths(int n_relays, int k, int relay, int delay);

}  // namespace anc
