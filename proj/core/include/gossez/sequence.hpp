#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "gossez/rational.hpp"

namespace gossez {

/// 1-based coordinate index, matching sequences indexed by {1, 2, 3, ...}.
using Index = std::size_t;

/// Finitely supported element of l1 with exact rational entries.
/// No stored entry is zero, so two SparseSeq compare equal iff they are the
/// same vector.
class SparseSeq {
 public:
  SparseSeq() = default;
  SparseSeq(std::initializer_list<std::pair<const Index, Rational>> entries);
  explicit SparseSeq(std::map<Index, Rational> entries);

  /// Sets coordinate m (m >= 1); assigning zero removes it from the support.
  void set(Index m, const Rational& value);

  [[nodiscard]] Rational at(Index m) const;
  [[nodiscard]] const std::map<Index, Rational>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t support_size() const { return entries_.size(); }
  /// Largest index in the support, 0 for the zero vector.
  [[nodiscard]] Index max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  friend bool operator==(const SparseSeq&, const SparseSeq&) = default;

 private:
  std::map<Index, Rational> entries_;
};

/// Eventually constant bounded sequence: coordinates 1..prefix.size() are
/// stored, every later coordinate equals tail. Always kept canonical (the
/// last prefix entry differs from tail), so equality is structural.
class EvConstSeq {
 public:
  EvConstSeq() = default;
  explicit EvConstSeq(std::vector<Rational> prefix, Rational tail = Rational{});

  [[nodiscard]] Rational at(Index m) const;
  [[nodiscard]] const std::vector<Rational>& prefix() const { return prefix_; }
  [[nodiscard]] const Rational& tail() const { return tail_; }
  /// Number of explicitly stored coordinates.
  [[nodiscard]] std::size_t length() const { return prefix_.size(); }

  friend bool operator==(const EvConstSeq&, const EvConstSeq&) = default;

 private:
  std::vector<Rational> prefix_;
  Rational tail_;
};

Rational l1_norm(const SparseSeq& x);
Rational sup_norm(const EvConstSeq& y);
/// Sum of all entries, i.e. pair0(x, e*).
Rational total(const SparseSeq& x);
/// The l1 x l-infinity pairing, sum over the support of x of x_m * y_m.
Rational pair0(const SparseSeq& x, const EvConstSeq& y);
inline Rational limit(const EvConstSeq& y) { return y.tail(); }

SparseSeq operator+(const SparseSeq& a, const SparseSeq& b);
SparseSeq operator-(const SparseSeq& a, const SparseSeq& b);
SparseSeq operator-(const SparseSeq& a);
SparseSeq operator*(const Rational& s, const SparseSeq& a);

EvConstSeq operator+(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq operator-(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq operator-(const EvConstSeq& a);
EvConstSeq operator*(const Rational& s, const EvConstSeq& a);

/// e* = (1, 1, 1, ...).
EvConstSeq e_star();
/// e_m* = (0, ..., 0, 1, 0, ...) with the 1 in place m. Throws DomainError if m < 1.
EvConstSeq e_m(Index m);
/// The l1 vector value * e_m. Throws DomainError if m < 1.
SparseSeq point_mass(Index m, const Rational& value);

}  // namespace gossez
