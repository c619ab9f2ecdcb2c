#include "gossez/operators.hpp"

#include <vector>

#include "gossez/errors.hpp"

namespace gossez {

EvConstSeq gossez_apply(const SparseSeq& x) {
  const Index len = x.max_index();
  const Rational sum = total(x);

  // before = sum_{n<m} x_n, after = sum_{n>m} x_n, swept left to right.
  std::vector<Rational> prefix;
  prefix.reserve(len);
  Rational before;
  for (Index m = 1; m <= len; ++m) {
    const Rational xm = x.at(m);
    const Rational after = sum - before - xm;
    prefix.push_back(after - before);
    before += xm;
  }
  return EvConstSeq(std::move(prefix), -sum);
}

EvConstSeq t_apply(const SparseSeq& x) {
  const Index len = x.max_index();
  std::vector<Rational> prefix(len);
  Rational after;
  for (Index m = len; m >= 1; --m) {
    const Rational xm = x.at(m);
    prefix[m - 1] = xm + Rational(2) * after;
    after += xm;
  }
  return EvConstSeq(std::move(prefix), Rational{});
}

SparseSeq y_seq(Index n) {
  if (n < 1) throw DomainError("y_seq: n must be >= 1");
  SparseSeq y;
  y.set(n, Rational(1));
  for (Index m = 1; m < n; ++m) y.set(m, Rational((n - m) % 2 == 0 ? 2 : -2));
  return y;
}

Rational pair1(const EvConstSeq& y, const BidualElem& xss) {
  return pair0(xss.w, y) + xss.alpha * limit(y);
}

Rational wstar_pair(const BidualElem& xss) {
  return pair1(e_star(), xss) - pair0(w_apply(xss), e_star());
}

Rational bidual_norm(const BidualElem& xss) { return l1_norm(xss.w) + abs(xss.alpha); }

EvConstSeq g_star_apply(const BidualElem& xss) {
  return -gossez_apply(w_apply(xss)) - wstar_pair(xss) * e_star();
}

Rational g_star_quadratic(const BidualElem& xss) { return pair1(g_star_apply(xss), xss); }

}  // namespace gossez
