#pragma once

#include <vector>

#include "anc/polynomial.hpp"

namespace anc {

// All real roots of p inside the open interval (lo, hi), ascending and
// deduplicated. Roots are isolated by recursing on the critical points of p
// (p is monotone between consecutive critical points, so each subinterval
// holds at most one sign change), refined by bisection and polished with a
// Newton step. Even-multiplicity roots are caught as critical points where
// |p| vanishes. A polynomial that is zero relative to its coefficient scale
// yields no roots.
std::vector<double> real_roots_in_interval(const CosinePolynomial& p, double lo, double hi);

}  // namespace anc
