#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gossez/lp.hpp"
#include "gossez/sequence.hpp"

namespace gossez {

/// 1/4 lambda ||x**||^2, the ceiling on -<A* x**, x**> whenever A* x** lies in
/// the closed range of A + lambda J. Throws DomainError if lambda <= 0 or norm < 0.
double theorem_a_bound(double lambda, double norm_xss);

/// Smallest distance from -e* to the range of G + lambda J compatible with
/// 1 <= 1/4 lambda (1 + d/lambda)^2 + d, i.e. the nonnegative root
/// d = sqrt(8 lambda^2 + 4 lambda) - 3 lambda. Defined for 0 < lambda <= 4.
double distance_lower_bound(double lambda);

/// Left-hand side gap of the bound: 1/4 lambda (1 + eps/lambda)^2 + eps - 1.
double consistency_slack(double lambda, double eps);

/// Sign of each coordinate of x: -1, 0 or +1.
using SignPattern = std::vector<int>;

struct PatternSolution {
  double value = 0.0;        // minimized sup-norm residual t
  std::vector<double> x;     // dense x_1..x_n
};

/// Builds the LP whose optimum is the smallest clamped residual over x with
/// sign pattern sigma (n = sigma.size()). Variables: a_m = sigma_m x_m >= 0 for
/// each sigma_m != 0, then t.
lp::Problem pattern_problem(const SignPattern& sigma, double lambda, const EvConstSeq& target);

/// Solves pattern_problem. Throws DomainError if lambda <= 0 and
/// std::runtime_error if the LP is not optimal.
PatternSolution pattern_lp(const SignPattern& sigma, double lambda, const EvConstSeq& target);

enum class ProbeMethod { Exact, Heuristic };

std::string to_string(ProbeMethod m);
ProbeMethod parse_method(const std::string& s);

struct ProbeResult {
  double lambda = 0.0;
  std::size_t dim = 0;
  double estimate = 0.0;
  SparseSeq certificate_x;
  EvConstSeq certificate_selection;
  double lower_bound = 0.0;
  ProbeMethod method = ProbeMethod::Exact;
  std::uint64_t patterns_explored = 0;
  std::uint64_t seed = 0;
  std::int64_t runtime_ms = 0;
  SignPattern pattern;
  EvConstSeq target;
};

/// -e*, the image of x0** under G*.
EvConstSeq neg_e_star();

/// d(lambda) when target is -e* and lambda <= 4, otherwise 0.
double probe_lower_bound(double lambda, const EvConstSeq& target);

struct ProbeOptions {
  unsigned threads = 0;  // 0: default_thread_count()
};

/// Honors GOSSEZ_LAB_THREADS, falling back to hardware concurrency.
unsigned default_thread_count();

inline constexpr std::size_t kMaxExactDim = 12;
inline constexpr std::size_t kMaxHeuristicDim = 40;

/// Minimum of pattern_lp over all 3^n sign patterns. Among patterns within
/// 1e-12 of the minimum the lexicographically smallest (with -1 < 0 < +1) is
/// reported, so the result does not depend on the thread count.
ProbeResult probe_exact(double lambda, std::size_t n, const EvConstSeq& target, ProbeOptions opts = {});

/// Seeded hill climbing over sign patterns using at most `budget` LP solves.
/// Patterns are memoized, so once every pattern has been solved the result
/// coincides with probe_exact.
ProbeResult probe_heuristic(double lambda, std::size_t n, const EvConstSeq& target, std::uint64_t budget,
                            std::uint64_t seed);

/// Whether result.estimate is compatible with the distance bound for the
/// target -e*. Throws DomainError for any other target.
bool theorem_consistency_check(const ProbeResult& result);

/// Re-evaluates the certificate with exact rational arithmetic.
double certificate_residual(const ProbeResult& result);

}  // namespace gossez
