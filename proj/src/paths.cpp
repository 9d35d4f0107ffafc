#include "anc/paths.hpp"

#include <stdexcept>

namespace anc {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (n > 62) throw std::invalid_argument("binomial: n > 62 would overflow 64-bit counts");
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    // multiply-then-divide stays exact: result * (n-r+i) is divisible by i
    result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return static_cast<std::int64_t>(result);
}

PathsByDelay enumerate_paths(const ChainNetwork& net, int origin, int dest) {
  if (!net.valid_node(origin) || !net.valid_node(dest))
    throw std::invalid_argument("enumerate_paths: node out of range");
  if (origin >= dest) throw std::invalid_argument("enumerate_paths: requires origin < dest");

  // suffix[v] = every v -> dest node list, built backwards from dest
  std::vector<std::vector<std::vector<int>>> suffix(static_cast<size_t>(dest + 1));
  suffix[static_cast<size_t>(dest)] = {{dest}};
  for (int v = dest - 1; v >= origin; --v) {
    auto& lists = suffix[static_cast<size_t>(v)];
    for (int w : net.forward_neighbors(v)) {
      if (w > dest) break;
      for (const auto& tail : suffix[static_cast<size_t>(w)]) {
        std::vector<int> nodes;
        nodes.reserve(tail.size() + 1);
        nodes.push_back(v);
        nodes.insert(nodes.end(), tail.begin(), tail.end());
        lists.push_back(std::move(nodes));
      }
    }
  }

  PathsByDelay out;
  for (auto& nodes : suffix[static_cast<size_t>(origin)]) {
    Path p;
    p.delay = origin == net.source() ? static_cast<int>(nodes.size()) - 2
                                     : static_cast<int>(nodes.size()) - 1;
    p.nodes = std::move(nodes);
    out[p.delay].push_back(std::move(p));
  }
  return out;
}

namespace {

void check_chain_params(int n_relays, int k) {
  if (n_relays < 1) throw std::invalid_argument("path count: n_relays must be >= 1");
  if (k < 1 || k > n_relays + 1)
    throw std::invalid_argument("path count: k must lie in [1, n_relays+1]");
}

std::uint64_t nonnegative(__int128 sum) {
  if (sum < 0) throw std::logic_error("path count: inclusion-exclusion went negative");
  return static_cast<std::uint64_t>(sum);
}

}  // namespace

std::uint64_t count_source_paths(int n_relays, int k, int delay) {
  check_chain_params(n_relays, k);
  if (delay < n_relays / k || delay > n_relays) return 0;
  __int128 sum = 0;
  for (int r = 0; r <= delay + 1; ++r) {
    const __int128 term = static_cast<__int128>(binomial(delay + 1, r)) *
                          static_cast<__int128>(binomial(n_relays - static_cast<std::int64_t>(r) * k, delay));
    sum += (r % 2 == 0) ? term : -term;
  }
  return nonnegative(sum);
}

std::uint64_t count_relay_paths(int n_relays, int k, int relay, int delay) {
  check_chain_params(n_relays, k);
  if (relay < 1 || relay > n_relays)
    throw std::invalid_argument("count_relay_paths: relay index out of range");
  const int span = n_relays - relay;
  if (delay < span / k + 1 || delay > span + 1) return 0;
  __int128 sum = 0;
  for (int r = 0; r <= delay; ++r) {
    const __int128 term = static_cast<__int128>(binomial(delay, r)) *
                          static_cast<__int128>(binomial(span - static_cast<std::int64_t>(r) * k, delay - 1));
    sum += (r % 2 == 0) ? term : -term;
  }
  return nonnegative(sum);
}

}  // namespace anc
