#include "anc/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace anc {

Transcript simulate(const ChainNetwork& net, const ScalingVector& beta, const SimOptions& opts) {
  const int nodes = net.node_count();
  const int dest = net.destination();
  if (opts.horizon < 1) throw std::invalid_argument("simulate: horizon must be >= 1");
  if (static_cast<int>(beta.size()) != net.n_relays())
    throw std::invalid_argument("simulate: need one beta per relay");
  if (opts.impulse_relay < 0 || opts.impulse_relay > net.n_relays())
    throw std::invalid_argument("simulate: impulse_relay out of range");
  if (!opts.noise_enabled.empty() && static_cast<int>(opts.noise_enabled.size()) != nodes)
    throw std::invalid_argument("simulate: noise_enabled must have one entry per node");

  Transcript tr;
  tr.x.assign(static_cast<size_t>(nodes), std::vector<double>(static_cast<size_t>(opts.horizon), 0.0));
  tr.y = tr.x;

  Rng rng(opts.seed);
  const double sigma = std::sqrt(net.noise_var());
  const double source_amp = std::sqrt(net.source_power());

  for (int n = 0; n < opts.horizon; ++n) {
    switch (opts.source) {
      case SimOptions::Source::impulse:
        tr.x[0][static_cast<size_t>(n)] = (n == 0) ? 1.0 : 0.0;
        break;
      case SimOptions::Source::gaussian:
        tr.x[0][static_cast<size_t>(n)] = rng.normal(0.0, source_amp);
        break;
      case SimOptions::Source::off:
        break;
    }
    for (int i = 1; i <= dest; ++i) {
      double acc = 0.0;
      for (int j : net.upstream_neighbors(i))
        acc += net.gain(j, i) * tr.x[static_cast<size_t>(j)][static_cast<size_t>(n)];
      if (!opts.noise_enabled.empty() && opts.noise_enabled[static_cast<size_t>(i)])
        acc += rng.normal(0.0, sigma);
      if (opts.impulse_relay == i && n == 0) acc += 1.0;
      tr.y[static_cast<size_t>(i)][static_cast<size_t>(n)] = acc;
      if (i <= net.n_relays() && n + 1 < opts.horizon)
        tr.x[static_cast<size_t>(i)][static_cast<size_t>(n + 1)] =
            beta[static_cast<size_t>(i - 1)] * acc;
    }
  }
  return tr;
}

std::map<int, double> impulse_response(const ChainNetwork& net, const ScalingVector& beta,
                                       int origin) {
  if (origin < 0 || origin > net.n_relays())
    throw std::invalid_argument("impulse_response: origin must be the source or a relay");

  SimOptions opts;
  opts.horizon = net.n_relays() + 3;  // longest delay is N for source paths, N-m+1 for noise
  opts.source = origin == net.source() ? SimOptions::Source::impulse : SimOptions::Source::off;
  opts.impulse_relay = origin == net.source() ? 0 : origin;

  const Transcript tr = simulate(net, beta, opts);
  std::map<int, double> taps;
  const auto& yt = tr.y[static_cast<size_t>(net.destination())];
  for (int n = 0; n < opts.horizon; ++n) {
    const double v = yt[static_cast<size_t>(n)];
    if (v != 0.0) taps[n] = v;
  }
  return taps;
}

PowerEstimate estimate_power(const ChainNetwork& net, const ScalingVector& beta, int node,
                             std::int64_t samples, std::uint64_t seed, PowerKind kind) {
  if (node < 1 || node > net.destination())
    throw std::invalid_argument("estimate_power: node out of range");
  if (kind == PowerKind::transmit && node > net.n_relays())
    throw std::invalid_argument("estimate_power: transmit power is defined for relays only");
  if (samples < 10'000)
    throw std::invalid_argument("estimate_power: need at least 10^4 samples");

  const int warmup = net.n_relays() + 1;
  SimOptions opts;
  opts.horizon = warmup + static_cast<int>(samples);
  opts.seed = seed;
  opts.source = SimOptions::Source::gaussian;
  opts.noise_enabled.assign(static_cast<size_t>(net.node_count()), 1);
  opts.noise_enabled[0] = 0;

  const Transcript tr = simulate(net, beta, opts);
  const auto& series =
      (kind == PowerKind::received ? tr.y : tr.x)[static_cast<size_t>(node)];

  // batch means over the post-warm-up window; batches are much longer than
  // the correlation length (N+1), so the error bar is trustworthy
  const std::int64_t batches = samples >= 100'000 ? 1000 : 100;
  const std::int64_t per_batch = samples / batches;
  const std::int64_t used = batches * per_batch;

  double total = 0.0;
  std::vector<double> batch_mean(static_cast<size_t>(batches), 0.0);
  for (std::int64_t b = 0; b < batches; ++b) {
    double acc = 0.0;
    for (std::int64_t i = 0; i < per_batch; ++i) {
      const double v = series[static_cast<size_t>(warmup + b * per_batch + i)];
      acc += v * v;
    }
    batch_mean[static_cast<size_t>(b)] = acc / static_cast<double>(per_batch);
    total += acc;
  }
  const double mean = total / static_cast<double>(used);
  double var = 0.0;
  for (double bm : batch_mean) var += (bm - mean) * (bm - mean);
  var /= static_cast<double>(batches - 1);
  return {mean, std::sqrt(var / static_cast<double>(batches))};
}

}  // namespace anc
