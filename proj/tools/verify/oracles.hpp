#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "gossez/lp.hpp"

// Reference computations that share no code path with the library routines
// they check.

namespace gossez::oracle {

/// Minimum objective over all basic feasible points, found by solving every
/// n x n subsystem of active constraints (equalities always active, plus
/// inequality rows and x_j = 0 bounds). Only for small, bounded problems with
/// nonnegative variables. nullopt when no feasible vertex exists.
std::optional<double> vertex_enumeration(const lp::Problem& problem);

/// Random feasible, bounded LP with 1..max_vars nonnegative variables and
/// 1..max_rows constraints; the last row caps the sum of the variables.
lp::Problem random_bounded_lp(std::mt19937_64& rng, std::size_t max_vars = 4, std::size_t max_rows = 8);

/// Root of 1/4 lambda (1 + d/lambda)^2 + d = 1 on [0, 1] by bisection.
double bisect_distance_bound(double lambda);

}  // namespace gossez::oracle
