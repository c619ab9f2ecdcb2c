#pragma once

#include <cstddef>
#include <vector>

namespace gossez::lp {

enum class Relation { LessEqual, Equal };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEqual;
  double bound = 0.0;
};

/// minimize objective . x subject to the constraint rows. Variables are
/// nonnegative unless flagged in free_vars (empty means none are free).
struct Problem {
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::size_t num_vars = 0;
  std::vector<bool> free_vars;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> values;
  double objective = 0.0;
};

inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kOptimalityTol = 1e-9;

/// Two-phase dense tableau simplex with Bland's rule. Throws DomainError on a
/// malformed problem (row or objective length != num_vars, non-finite data).
Solution solve(const Problem& problem);

/// Largest violation of any constraint or sign restriction at x.
double max_violation(const Problem& problem, const std::vector<double>& x);

}  // namespace gossez::lp
