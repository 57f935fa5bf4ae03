#pragma once

// Internal exact linear algebra: rational Gaussian elimination and a
// phase-one simplex used for Newton-polyhedron membership in dimension >= 3.

#include <vector>

#include "antinef/numeric.hpp"

namespace antinef::detail {

using RatMatrix = std::vector<std::vector<Rat>>;

// Solve A x = b for square nonsingular A. Throws Error("SingularMatrix")
// otherwise; callers only pass matrices known to be invertible.
std::vector<Rat> solve_linear(RatMatrix a, std::vector<Rat> b);

// Is {z >= 0 : A z = b} nonempty? Phase-one simplex, Bland's rule.
bool lp_feasible(RatMatrix a, std::vector<Rat> b);

}  // namespace antinef::detail
