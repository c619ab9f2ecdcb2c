#pragma once

#include <cstdint>
#include <random>

#include "gossez/operators.hpp"
#include "gossez/rational.hpp"
#include "gossez/sequence.hpp"

namespace gossez {

/// Seeded generator of random exact values for property suites. Uses raw
/// mt19937_64 output with modular reduction so streams are identical across
/// standard libraries.
class RandomValues {
 public:
  explicit RandomValues(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// p/q with q in [1, max_den] and |p/q| <= bound.
  Rational rational(std::int64_t bound, std::int64_t max_den = 12);
  /// Nonzero rational with the same constraints.
  Rational nonzero_rational(std::int64_t bound, std::int64_t max_den = 12);
  /// Support size in [0, max_support], indices in [1, max_index].
  SparseSeq sparse(std::size_t max_support = 20, Index max_index = 40, std::int64_t bound = 10);
  /// Prefix length in [0, max_len], every entry bounded by bound.
  EvConstSeq ev_const(std::size_t max_len = 12, std::int64_t bound = 10, std::int64_t max_den = 12);
  BidualElem bidual(std::size_t max_support = 20, Index max_index = 40, std::int64_t bound = 10);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gossez
