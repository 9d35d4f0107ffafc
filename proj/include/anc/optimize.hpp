#pragma once

#include <cstdint>
#include <vector>

#include "anc/chain_network.hpp"
#include "anc/gains.hpp"

namespace anc {

enum class Objective { exact, zeroth, upper, lower };
enum class Method { grid, multistart_ascent, sequential };

struct OptimizeOptions {
  Method method = Method::multistart_ascent;
  int grid_resolution = 200;   // grid: theta_i in {0, 1/g, ..., 1}
  int starts = 16;             // multistart: number of random theta starts
  std::uint64_t seed = 1;
  std::int64_t max_evaluations = 10'000'000;
  double quad_tol = 1e-9;      // quadrature tolerance for the exact objective
};

struct OptimizationResult {
  ScalingVector beta_star;
  double value = 0.0;  // bits/channel use
  Objective objective = Objective::exact;
  std::int64_t evaluations = 0;
  bool converged = false;
};

const char* objective_name(Objective o);

// Objective value at a fixed beta (assumed feasible).
double evaluate_objective(const ChainNetwork& net, Objective objective, const ScalingVector& beta,
                          double quad_tol);

// Maximize the chosen rate objective over the nested feasible box, searched
// in normalized theta-space where the box becomes the unit cube. Ties between
// equal-value optima are broken toward the smaller sum of theta.
OptimizationResult optimize(const ChainNetwork& net, Objective objective,
                            const OptimizeOptions& opts);

// Coordinate-wise scheme for networks whose outgoing gains are equal at every
// transmitting node: relays are visited in index order, each 1-D restriction
// of the zeroth-order objective maximized over {0, 1} plus its interior
// stationary points, cycling until the improvement drops below 1e-9 bits.
// Throws std::invalid_argument when the equal-gain property does not hold.
OptimizationResult optimize_sequential_equal_gains(const ChainNetwork& net,
                                                   const OptimizeOptions& opts);

}  // namespace anc
