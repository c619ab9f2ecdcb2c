#pragma once

#include "gossez/rational.hpp"
#include "gossez/sequence.hpp"

namespace gossez {

/// Element x** = w^ + alpha * x0** of the bidual of l1, where x0** is a
/// norm-one Banach limit (it acts on eventually constant sequences by taking
/// the tail value). Every pairing against c depends on x** only through
/// (w, alpha): w = W x** and alpha = <x**, w***>.
struct BidualElem {
  SparseSeq w;
  Rational alpha;

  friend bool operator==(const BidualElem&, const BidualElem&) = default;
};

/// Canonical image x^ of x in the bidual.
inline BidualElem embed(const SparseSeq& x) { return BidualElem{x, Rational{}}; }
/// The distinguished element x0**.
inline BidualElem x0_star_star() { return BidualElem{SparseSeq{}, Rational(1)}; }

/// (Gx)_m = sum_{n>m} x_n - sum_{n<m} x_n. The prefix covers 1..max(support)
/// and the tail is -sum x.
EvConstSeq gossez_apply(const SparseSeq& x);

/// (Tx)_m = x_m + 2 sum_{n>m} x_n; tail 0.
EvConstSeq t_apply(const SparseSeq& x);

/// The finitely supported y with T y = e_n*: 1 in place n and
/// y_m = 2 (-1)^(n-m) for m < n, i.e. (..., 2, -2, 1). Throws DomainError if n < 1.
SparseSeq y_seq(Index n);

/// W x** = (<e_m*, x**>)_m. The x0** part contributes nothing since each
/// e_m* has limit 0.
inline SparseSeq w_apply(const BidualElem& xss) { return xss.w; }

/// <y, x**> for y in c: pair0(w, y) + alpha * lim y.
Rational pair1(const EvConstSeq& y, const BidualElem& xss);

/// <x**, w***> evaluated as <e*, x**> - <W x**, e*>, not by reading alpha.
Rational wstar_pair(const BidualElem& xss);

/// ||x**|| on the representable subspace: ||w||_1 + |alpha|.
Rational bidual_norm(const BidualElem& xss);

/// G* x** = -G W x** - <x**, w***> e*.
EvConstSeq g_star_apply(const BidualElem& xss);

/// <G* x**, x**> computed through pair1. Equals -alpha^2.
Rational g_star_quadratic(const BidualElem& xss);

}  // namespace gossez
