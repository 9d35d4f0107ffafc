#include "anc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "anc/rate.hpp"
#include "anc/rng.hpp"
#include "anc/spectrum.hpp"

namespace anc {

const char* objective_name(Objective o) {
  switch (o) {
    case Objective::exact: return "exact";
    case Objective::zeroth: return "zeroth";
    case Objective::upper: return "upper";
    case Objective::lower: return "lower";
  }
  return "?";
}

double evaluate_objective(const ChainNetwork& net, Objective objective, const ScalingVector& beta,
                          double quad_tol) {
  const SpectralRatio sr = build_spectral_ratio(net, beta);
  switch (objective) {
    case Objective::exact: return exact_rate(sr, quad_tol);
    case Objective::zeroth: return zeroth_rate(sr).rate;
    case Objective::upper: return tangent_bounds(sr).upper;
    case Objective::lower: return tangent_bounds(sr).lower;
  }
  throw std::invalid_argument("evaluate_objective: unknown objective");
}

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// Objective in theta-space with an evaluation budget. Every probed theta maps
// to a feasible beta by construction.
class Evaluator {
 public:
  Evaluator(const ChainNetwork& net, Objective objective, const OptimizeOptions& opts)
      : net_(net), objective_(objective), quad_tol_(opts.quad_tol), budget_(opts.max_evaluations) {}

  std::optional<double> operator()(const std::vector<double>& theta) {
    if (evaluations_ >= budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++evaluations_;
    return evaluate_objective(net_, objective_, beta_from_theta(net_, theta), quad_tol_);
  }

  std::int64_t evaluations() const { return evaluations_; }
  bool exhausted() const { return exhausted_; }

 private:
  const ChainNetwork& net_;
  Objective objective_;
  double quad_tol_;
  std::int64_t budget_;
  std::int64_t evaluations_ = 0;
  bool exhausted_ = false;
};

struct Best {
  std::vector<double> theta;
  double value = -std::numeric_limits<double>::infinity();

  // ties broken toward the smaller total theta (less transmit power)
  bool offer(const std::vector<double>& t, double v) {
    if (v > value || (v == value && (theta.empty() || sum(t) < sum(theta)))) {
      theta = t;
      value = v;
      return true;
    }
    return false;
  }
};

constexpr double kCycleTol = 1e-9;  // bits; stop when a full cycle gains less
constexpr int kMaxCycles = 500;

// Golden-section maximum of the 1-D restriction along coordinate `axis`,
// plus the endpoint values. Returns false once the budget runs out.
bool line_search(Evaluator& eval, std::vector<double>& theta, int axis, Best& best) {
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr double kTolU = 1e-8;

  auto probe = [&](double t) -> std::optional<double> {
    theta[static_cast<size_t>(axis)] = t;
    const auto v = eval(theta);
    if (v) best.offer(theta, *v);
    return v;
  };

  double a = 0.0, b = 1.0;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  auto fc = probe(c);
  auto fd = probe(d);
  if (!fc || !fd) return false;
  while (b - a > kTolU) {
    if (*fc > *fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = probe(c);
      if (!fc) return false;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = probe(d);
      if (!fd) return false;
    }
  }
  if (!probe(0.5 * (a + b))) return false;
  // the per-coordinate optimum may sit on the box boundary
  if (!probe(0.0)) return false;
  if (!probe(1.0)) return false;
  return true;
}

// Cyclic coordinate ascent from theta0; updates `best` with every probe.
bool coordinate_ascent(Evaluator& eval, std::vector<double> theta, Best& best) {
  const int n = static_cast<int>(theta.size());
  auto v0 = eval(theta);
  if (!v0) return false;
  best.offer(theta, *v0);

  double current = *v0;
  for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
    const double at_cycle_start = current;
    for (int axis = 0; axis < n; ++axis) {
      Best axis_best;
      std::vector<double> probe_theta = theta;
      if (!line_search(eval, probe_theta, axis, axis_best)) return false;
      best.offer(axis_best.theta, axis_best.value);
      if (axis_best.value > current ||
          (axis_best.value == current &&
           axis_best.theta[static_cast<size_t>(axis)] < theta[static_cast<size_t>(axis)])) {
        theta = axis_best.theta;
        current = axis_best.value;
      }
    }
    if (current - at_cycle_start < kCycleTol) return true;
  }
  return true;
}

OptimizationResult finish(const ChainNetwork& net, Objective objective, const Evaluator& eval,
                          const Best& best, bool converged) {
  OptimizationResult result;
  result.objective = objective;
  result.evaluations = eval.evaluations();
  result.converged = converged && !eval.exhausted();
  result.beta_star = beta_from_theta(net, best.theta);
  result.value = best.value;
  return result;
}

OptimizationResult optimize_grid(const ChainNetwork& net, Objective objective,
                                 const OptimizeOptions& opts) {
  if (opts.grid_resolution < 1)
    throw std::invalid_argument("optimize: grid_resolution must be >= 1");
  const int n = net.n_relays();
  const int g = opts.grid_resolution;

  Evaluator eval(net, objective, opts);
  Best best;
  std::vector<int> idx(static_cast<size_t>(n), 0);
  std::vector<double> theta(static_cast<size_t>(n), 0.0);
  bool done = false;
  while (!done) {
    for (int i = 0; i < n; ++i)
      theta[static_cast<size_t>(i)] = static_cast<double>(idx[static_cast<size_t>(i)]) / g;
    const auto v = eval(theta);
    if (!v) break;
    best.offer(theta, *v);
    // odometer increment, last axis fastest
    int axis = n - 1;
    while (axis >= 0 && ++idx[static_cast<size_t>(axis)] > g) {
      idx[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    done = axis < 0;
  }
  return finish(net, objective, eval, best, done);
}

OptimizationResult optimize_multistart(const ChainNetwork& net, Objective objective,
                                       const OptimizeOptions& opts) {
  if (opts.starts < 1) throw std::invalid_argument("optimize: starts must be >= 1");
  const int n = net.n_relays();

  Evaluator eval(net, objective, opts);
  Best best;
  bool all_finished = true;
  for (int s = 0; s < opts.starts; ++s) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(s)));
    std::vector<double> theta(static_cast<size_t>(n));
    for (auto& t : theta) t = rng.uniform();
    if (!coordinate_ascent(eval, std::move(theta), best)) {
      all_finished = false;
      break;
    }
  }
  return finish(net, objective, eval, best, all_finished);
}

// Stationary points of the 1-D restriction r(t), located by scanning a
// central-difference derivative for sign changes and bisecting each bracket.
std::vector<double> stationary_points(const std::function<std::optional<double>(double)>& r,
                                      bool& budget_ok) {
  constexpr int kScan = 64;
  constexpr double kStep = 1e-6;

  auto deriv = [&](double t) -> std::optional<double> {
    const double a = std::max(0.0, t - kStep);
    const double b = std::min(1.0, t + kStep);
    const auto ra = r(a);
    const auto rb = r(b);
    if (!ra || !rb) return std::nullopt;
    return (*rb - *ra) / (b - a);
  };

  std::vector<double> points;
  double prev_t = 0.0;
  std::optional<double> prev_d = deriv(prev_t);
  if (!prev_d) {
    budget_ok = false;
    return points;
  }
  for (int i = 1; i <= kScan; ++i) {
    const double t = static_cast<double>(i) / kScan;
    auto d = deriv(t);
    if (!d) {
      budget_ok = false;
      return points;
    }
    if ((*prev_d < 0.0) != (*d < 0.0)) {
      double a = prev_t, b = t, da = *prev_d;
      for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
        const double mid = 0.5 * (a + b);
        const auto dm = deriv(mid);
        if (!dm) {
          budget_ok = false;
          return points;
        }
        if ((da < 0.0) == (*dm < 0.0)) {
          a = mid;
          da = *dm;
        } else {
          b = mid;
        }
      }
      points.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_d = d;
  }
  return points;
}

}  // namespace

OptimizationResult optimize_sequential_equal_gains(const ChainNetwork& net,
                                                   const OptimizeOptions& opts) {
  if (!net.has_equal_outgoing_gains())
    throw std::invalid_argument(
        "optimize_sequential_equal_gains: outgoing gains are not equal at every node");
  const int n = net.n_relays();

  Evaluator eval(net, Objective::zeroth, opts);
  Best best;
  std::vector<double> theta(static_cast<size_t>(n), 1.0);
  auto v0 = eval(theta);
  if (!v0) return finish(net, Objective::zeroth, eval, best, false);
  best.offer(theta, *v0);
  double current = *v0;

  bool budget_ok = true;
  for (int cycle = 0; cycle < kMaxCycles && budget_ok; ++cycle) {
    const double at_cycle_start = current;
    for (int i = 0; i < n && budget_ok; ++i) {
      auto restriction = [&](double t) -> std::optional<double> {
        std::vector<double> probe = theta;
        probe[static_cast<size_t>(i)] = t;
        return eval(probe);
      };

      std::vector<double> candidates = {0.0, 1.0};
      for (double t : stationary_points(restriction, budget_ok)) candidates.push_back(t);
      if (!budget_ok) break;

      double best_t = theta[static_cast<size_t>(i)];
      double best_v = current;
      for (double t : candidates) {
        const auto v = restriction(t);
        if (!v) {
          budget_ok = false;
          break;
        }
        std::vector<double> probe = theta;
        probe[static_cast<size_t>(i)] = t;
        best.offer(probe, *v);
        if (*v > best_v || (*v == best_v && t < best_t)) {
          best_v = *v;
          best_t = t;
        }
      }
      theta[static_cast<size_t>(i)] = best_t;
      current = best_v;
    }
    if (budget_ok && current - at_cycle_start < kCycleTol) break;
  }
  return finish(net, Objective::zeroth, eval, best, budget_ok);
}

OptimizationResult optimize(const ChainNetwork& net, Objective objective,
                            const OptimizeOptions& opts) {
  switch (opts.method) {
    case Method::grid:
      return optimize_grid(net, objective, opts);
    case Method::multistart_ascent:
      return optimize_multistart(net, objective, opts);
    case Method::sequential:
      if (objective != Objective::zeroth)
        throw std::invalid_argument("optimize: the sequential method maximizes the zeroth objective");
      return optimize_sequential_equal_gains(net, opts);
  }
  throw std::invalid_argument("optimize: unknown method");
}

}  // namespace anc
