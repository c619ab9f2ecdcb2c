#include "gossez/random.hpp"

#include <vector>

namespace gossez {

std::int64_t RandomValues::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational RandomValues::rational(std::int64_t bound, std::int64_t max_den) {
  const std::int64_t q = integer(1, max_den);
  const std::int64_t p = integer(-bound * q, bound * q);
  return Rational(static_cast<long>(p), static_cast<long>(q));
}

Rational RandomValues::nonzero_rational(std::int64_t bound, std::int64_t max_den) {
  for (;;) {
    Rational r = rational(bound, max_den);
    if (!r.is_zero()) return r;
  }
}

SparseSeq RandomValues::sparse(std::size_t max_support, Index max_index, std::int64_t bound) {
  SparseSeq x;
  const auto k = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_support)));
  for (std::size_t i = 0; i < k; ++i) {
    x.set(static_cast<Index>(integer(1, static_cast<std::int64_t>(max_index))), nonzero_rational(bound));
  }
  return x;
}

EvConstSeq RandomValues::ev_const(std::size_t max_len, std::int64_t bound, std::int64_t max_den) {
  const auto len = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_len)));
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 0; i < len; ++i) prefix.push_back(rational(bound, max_den));
  Rational tail = rational(bound, max_den);
  return EvConstSeq(std::move(prefix), std::move(tail));
}

BidualElem RandomValues::bidual(std::size_t max_support, Index max_index, std::int64_t bound) {
  SparseSeq w = sparse(max_support, max_index, bound);
  return BidualElem{std::move(w), rational(bound)};
}

}  // namespace gossez
