#pragma once

#include <map>

#include "gossez/errors.hpp"
#include "gossez/rational.hpp"
#include "gossez/sequence.hpp"

namespace gossez {

/// Exact description of the set Jx for x in l1: coordinates on the support
/// are forced to radius * sign(x_m); every other coordinate, and the tail,
/// ranges freely over [-free_bound, free_bound].
struct SelectionSpec {
  Rational radius;
  std::map<Index, Rational> forced;
  Rational free_bound;

  friend bool operator==(const SelectionSpec&, const SelectionSpec&) = default;
};

SelectionSpec selection_spec(const SparseSeq& x);

/// y in Jx: ||y||_inf == ||x||_1 and <x, y> == ||x||_1^2, both exact.
bool duality_map_contains(const SparseSeq& x, const EvConstSeq& y);

/// The point of Jx with every free coordinate set to zero.
EvConstSeq canonical_selection(const SparseSeq& x);

/// min over s in Jx of ||Gx + lambda s - target||_inf, evaluated exactly one
/// coordinate class at a time. Throws DomainError if lambda <= 0.
Rational clamped_residual(const SparseSeq& x, const Rational& lambda, const EvConstSeq& target);

/// A selection attaining clamped_residual: forced coordinates as in Jx, free
/// ones set to (target_m - (Gx)_m) / lambda clamped to [-r, r].
EvConstSeq clamped_selection(const SparseSeq& x, const Rational& lambda, const EvConstSeq& target);

/// Raised when u is outside the box |u_m| <= 2 lambda k (m >= 3).
class Prop3PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Prop3Witness {
  EvConstSeq point;  // (-k + 2 lambda k, -k - 2 lambda k, u_3, u_4, ...)
  bool member = false;  // (point - Gx) / lambda in Jx for x = k e_1 - k e_2
};

/// Builds the point of (G + lambda J)(k e_1 - k e_2) whose coordinates past
/// the second are read from u, and verifies membership exactly. Coordinates
/// 1 and 2 of u are ignored. Throws DomainError if k <= 0 or lambda <= 0 and
/// Prop3PreconditionError if u leaves the admissible box.
Prop3Witness prop3_witness(const Rational& k, const Rational& lambda, const EvConstSeq& u);

}  // namespace gossez
