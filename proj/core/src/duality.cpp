#include "gossez/duality.hpp"

#include <algorithm>
#include <vector>

#include "gossez/operators.hpp"

namespace gossez {

namespace {

void check_lambda(const Rational& lambda, const char* where) {
  if (lambda.sign() <= 0) throw DomainError(std::string(where) + ": lambda must be > 0");
}

Rational clamp(const Rational& v, const Rational& bound) { return max(-bound, min(v, bound)); }

}  // namespace

SelectionSpec selection_spec(const SparseSeq& x) {
  SelectionSpec spec;
  spec.radius = l1_norm(x);
  spec.free_bound = spec.radius;
  for (const auto& [m, v] : x.entries()) spec.forced.emplace(m, v.sign() > 0 ? spec.radius : -spec.radius);
  return spec;
}

bool duality_map_contains(const SparseSeq& x, const EvConstSeq& y) {
  const Rational r = l1_norm(x);
  return sup_norm(y) == r && pair0(x, y) == r * r;
}

EvConstSeq canonical_selection(const SparseSeq& x) {
  const SelectionSpec spec = selection_spec(x);
  std::vector<Rational> prefix(x.max_index());
  for (const auto& [m, v] : spec.forced) prefix[m - 1] = v;
  return EvConstSeq(std::move(prefix), Rational{});
}

Rational clamped_residual(const SparseSeq& x, const Rational& lambda, const EvConstSeq& target) {
  check_lambda(lambda, "clamped_residual");
  const EvConstSeq gx = gossez_apply(x);
  const Rational lr = lambda * l1_norm(x);

  const auto free_term = [&](const Rational& g, const Rational& t) {
    return max(Rational{}, abs(g - t) - lr);
  };

  Rational worst = free_term(gx.tail(), target.tail());
  const Index len = std::max({x.max_index(), gx.length(), target.length()});
  for (Index m = 1; m <= len; ++m) {
    const Rational g = gx.at(m);
    const Rational t = target.at(m);
    const Rational xm = x.at(m);
    const Rational term = xm.is_zero() ? free_term(g, t) : abs(g + Rational(xm.sign()) * lr - t);
    worst = max(worst, term);
  }
  return worst;
}

EvConstSeq clamped_selection(const SparseSeq& x, const Rational& lambda, const EvConstSeq& target) {
  check_lambda(lambda, "clamped_selection");
  const EvConstSeq gx = gossez_apply(x);
  const Rational r = l1_norm(x);

  const Index len = std::max({x.max_index(), gx.length(), target.length()});
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (Index m = 1; m <= len; ++m) {
    const Rational xm = x.at(m);
    if (xm.is_zero()) {
      prefix.push_back(clamp((target.at(m) - gx.at(m)) / lambda, r));
    } else {
      prefix.push_back(Rational(xm.sign()) * r);
    }
  }
  Rational tail = clamp((target.tail() - gx.tail()) / lambda, r);
  return EvConstSeq(std::move(prefix), std::move(tail));
}

Prop3Witness prop3_witness(const Rational& k, const Rational& lambda, const EvConstSeq& u) {
  if (k.sign() <= 0) throw DomainError("prop3_witness: k must be > 0");
  check_lambda(lambda, "prop3_witness");

  const Rational bound = Rational(2) * lambda * k;
  if (abs(u.tail()) > bound) throw Prop3PreconditionError("prop3_witness: |u_tail| exceeds 2*lambda*k");
  for (Index m = 3; m <= u.length(); ++m) {
    if (abs(u.at(m)) > bound) {
      throw Prop3PreconditionError("prop3_witness: |u_" + std::to_string(m) + "| exceeds 2*lambda*k");
    }
  }

  std::vector<Rational> prefix{bound - k, -k - bound};
  for (Index m = 3; m <= u.length(); ++m) prefix.push_back(u.at(m));
  Prop3Witness out{EvConstSeq(std::move(prefix), u.tail()), false};

  const SparseSeq x{{1, k}, {2, -k}};
  const EvConstSeq selection = (Rational(1) / lambda) * (out.point - gossez_apply(x));
  out.member = duality_map_contains(x, selection);
  return out;
}

}  // namespace gossez
