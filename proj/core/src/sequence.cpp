#include "gossez/sequence.hpp"

#include <algorithm>
#include <string>

#include "gossez/errors.hpp"

namespace gossez {

namespace {

void check_index(Index m, const char* where) {
  if (m < 1) throw DomainError(std::string(where) + ": index must be >= 1");
}

template <class F>
EvConstSeq zip(const EvConstSeq& a, const EvConstSeq& b, F f) {
  const std::size_t len = std::max(a.length(), b.length());
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (Index m = 1; m <= len; ++m) prefix.push_back(f(a.at(m), b.at(m)));
  return EvConstSeq(std::move(prefix), f(a.tail(), b.tail()));
}

}  // namespace

SparseSeq::SparseSeq(std::initializer_list<std::pair<const Index, Rational>> entries) {
  for (const auto& [m, v] : entries) set(m, v);
}

SparseSeq::SparseSeq(std::map<Index, Rational> entries) {
  for (auto& [m, v] : entries) set(m, v);
}

void SparseSeq::set(Index m, const Rational& value) {
  check_index(m, "SparseSeq::set");
  if (value.is_zero()) {
    entries_.erase(m);
  } else {
    entries_.insert_or_assign(m, value);
  }
}

Rational SparseSeq::at(Index m) const {
  const auto it = entries_.find(m);
  return it == entries_.end() ? Rational{} : it->second;
}

EvConstSeq::EvConstSeq(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Rational EvConstSeq::at(Index m) const {
  check_index(m, "EvConstSeq::at");
  return m <= prefix_.size() ? prefix_[m - 1] : tail_;
}

Rational l1_norm(const SparseSeq& x) {
  Rational s;
  for (const auto& [m, v] : x.entries()) s += abs(v);
  return s;
}

Rational sup_norm(const EvConstSeq& y) {
  Rational s = abs(y.tail());
  for (const auto& v : y.prefix()) s = max(s, abs(v));
  return s;
}

Rational total(const SparseSeq& x) {
  Rational s;
  for (const auto& [m, v] : x.entries()) s += v;
  return s;
}

Rational pair0(const SparseSeq& x, const EvConstSeq& y) {
  Rational s;
  for (const auto& [m, v] : x.entries()) s += v * y.at(m);
  return s;
}

SparseSeq operator+(const SparseSeq& a, const SparseSeq& b) {
  SparseSeq r = a;
  for (const auto& [m, v] : b.entries()) r.set(m, r.at(m) + v);
  return r;
}

SparseSeq operator-(const SparseSeq& a, const SparseSeq& b) {
  SparseSeq r = a;
  for (const auto& [m, v] : b.entries()) r.set(m, r.at(m) - v);
  return r;
}

SparseSeq operator-(const SparseSeq& a) { return Rational(-1) * a; }

SparseSeq operator*(const Rational& s, const SparseSeq& a) {
  SparseSeq r;
  if (s.is_zero()) return r;
  for (const auto& [m, v] : a.entries()) r.set(m, s * v);
  return r;
}

EvConstSeq operator+(const EvConstSeq& a, const EvConstSeq& b) {
  return zip(a, b, [](const Rational& u, const Rational& v) { return u + v; });
}

EvConstSeq operator-(const EvConstSeq& a, const EvConstSeq& b) {
  return zip(a, b, [](const Rational& u, const Rational& v) { return u - v; });
}

EvConstSeq operator-(const EvConstSeq& a) { return Rational(-1) * a; }

EvConstSeq operator*(const Rational& s, const EvConstSeq& a) {
  std::vector<Rational> prefix;
  prefix.reserve(a.length());
  for (const auto& v : a.prefix()) prefix.push_back(s * v);
  return EvConstSeq(std::move(prefix), s * a.tail());
}

EvConstSeq e_star() { return EvConstSeq({}, Rational(1)); }

EvConstSeq e_m(Index m) {
  check_index(m, "e_m");
  std::vector<Rational> prefix(m);
  prefix[m - 1] = Rational(1);
  return EvConstSeq(std::move(prefix), Rational{});
}

SparseSeq point_mass(Index m, const Rational& value) {
  check_index(m, "point_mass");
  SparseSeq r;
  r.set(m, value);
  return r;
}

}  // namespace gossez
