#include "suites.hpp"

#include <cmath>

#include "gossez/duality.hpp"
#include "gossez/lp.hpp"
#include "gossez/random.hpp"
#include "gossez/serialize.hpp"
#include "oracles.hpp"

namespace gossez::verify {

using nlohmann::json;

namespace {

// Distinct stream per suite so adding cases to one does not shift another.
std::uint64_t stream(const Config& cfg, std::uint64_t salt) { return cfg.seed * 0x9E3779B97F4A7C15ULL + salt; }

SuiteResult fail(SuiteResult r, json counterexample) {
  r.passed = false;
  r.counterexample = std::move(counterexample);
  return r;
}

}  // namespace

SuiteResult skewness(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "skewness";
  RandomValues gen(stream(cfg, 1));
  for (std::size_t i = 0; i < cfg.cases; ++i, ++r.cases) {
    const SparseSeq w = gen.sparse();
    const SparseSeq x = gen.sparse();
    const bool skew = pair0(w, ops.g(x)) + pair0(x, ops.g(w)) == Rational{};
    const bool quad = pair0(x, ops.g(x)).is_zero();
    if (!skew || !quad) return fail(r, json{{"w", w}, {"x", x}});
  }
  return r;
}

SuiteResult tail_law(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "tail-law";
  RandomValues gen(stream(cfg, 1));
  for (std::size_t i = 0; i < cfg.cases; ++i, ++r.cases) {
    const SparseSeq x = gen.sparse();
    gen.sparse();
    if (limit(ops.g(x)) != -pair0(x, e_star())) return fail(r, json{{"x", x}});
  }
  return r;
}

SuiteResult boundedness(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "boundedness";
  RandomValues gen(stream(cfg, 2));
  for (std::size_t i = 0; i < cfg.cases; ++i, ++r.cases) {
    const SparseSeq x = gen.sparse();
    if (sup_norm(ops.g(x)) > l1_norm(x)) return fail(r, json{{"x", x}});
  }
  return r;
}

SuiteResult adjoint(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "adjoint";
  RandomValues gen(stream(cfg, 3));
  const std::size_t n = std::max<std::size_t>(1, cfg.cases / 2);
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const SparseSeq x = gen.sparse();
    const BidualElem xss = gen.bidual();
    if (pair0(x, ops.g_star(xss)) != pair1(ops.g(x), xss)) return fail(r, json{{"x", x}, {"xss", xss}});
  }
  return r;
}

SuiteResult trz_identities(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "trz";
  const BidualElem x0 = x0_star_star();
  if (ops.g_star(x0) != -e_star() || pair1(ops.g_star(x0), x0) != Rational(-1)) {
    return fail(r, json{{"xss", x0}});
  }
  RandomValues gen(stream(cfg, 4));
  const std::size_t n = std::max<std::size_t>(1, cfg.cases / 2);
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const BidualElem xss = gen.bidual();
    const EvConstSeq image = ops.g_star(xss);
    const bool trz2 = image == -ops.g(xss.w) - xss.alpha * e_star();
    const bool trz1 = pair1(image, xss) == -(xss.alpha * xss.alpha);
    if (!trz1 || !trz2) return fail(r, json{{"xss", xss}});
  }
  return r;
}

SuiteResult w_identities(const Config& cfg, const OperatorTable&) {
  SuiteResult r;
  r.name = "w-identities";
  if (wstar_pair(x0_star_star()) != Rational(1) || bidual_norm(x0_star_star()) != Rational(1) ||
      !w_apply(x0_star_star()).empty()) {
    return fail(r, json{{"xss", x0_star_star()}});
  }
  RandomValues gen(stream(cfg, 5));
  for (std::size_t i = 0; i < cfg.cases; ++i, ++r.cases) {
    const SparseSeq x = gen.sparse();
    const BidualElem xss = gen.bidual();
    const bool retraction = w_apply(embed(x)) == x && wstar_pair(embed(x)).is_zero();
    const bool two_path = wstar_pair(xss) == xss.alpha;
    const bool bounded = l1_norm(w_apply(xss)) <= bidual_norm(xss);
    if (!retraction || !two_path || !bounded) return fail(r, json{{"x", x}, {"xss", xss}});
  }
  return r;
}

SuiteResult t_identity(const Config&, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "t-identity";
  for (Index n = 1; n <= 64; ++n, ++r.cases) {
    if (ops.t(y_seq(n)) != e_m(n)) return fail(r, json{{"n", n}, {"y", y_seq(n)}});
  }
  return r;
}

SuiteResult prop3_membership(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "prop3";
  RandomValues gen(stream(cfg, 6));
  const std::size_t per_cell = std::max<std::size_t>(1, cfg.cases / 50);
  const Rational lambdas[] = {Rational(1, 2), Rational(1), Rational(2), Rational(4)};
  for (long k = 1; k <= 5; ++k) {
    for (const Rational& lambda : lambdas) {
      const Rational bound = Rational(2) * lambda * Rational(k);
      for (std::size_t i = 0; i < per_cell; ++i, ++r.cases) {
        // Entries scaled into [-bound, bound]; a third of the cases sit on the boundary.
        EvConstSeq u = (bound / Rational(10)) * gen.ev_const(12, 10);
        if (i % 3 == 0) u = EvConstSeq(u.prefix(), i % 2 == 0 ? bound : -bound);
        const Prop3Witness w = prop3_witness(Rational(k), lambda, u);
        const SparseSeq x{{1, Rational(k)}, {2, Rational(-k)}};
        const bool direct = duality_map_contains(x, (Rational(1) / lambda) * (w.point - ops.g(x)));
        if (!w.member || !direct) {
          return fail(r, json{{"k", k}, {"lambda", lambda}, {"u", u}, {"point", w.point}});
        }
      }
    }
  }
  return r;
}

SuiteResult duality_map(const Config& cfg, const OperatorTable& ops) {
  SuiteResult r;
  r.name = "duality-map";
  RandomValues gen(stream(cfg, 7));
  for (std::size_t i = 0; i < cfg.cases; ++i, ++r.cases) {
    const SparseSeq x = gen.sparse(8, 12, 5);
    const Rational lambda = abs(gen.nonzero_rational(4));
    const EvConstSeq target = gen.ev_const(14, 5);
    const json ce{{"x", x}, {"lambda", lambda}, {"target", target}};

    if (!duality_map_contains(x, canonical_selection(x))) return fail(r, ce);

    const Rational best = clamped_residual(x, lambda, target);
    const EvConstSeq argmin = clamped_selection(x, lambda, target);
    const EvConstSeq gx = ops.g(x);
    if (!duality_map_contains(x, argmin) || sup_norm(gx + lambda * argmin - target) != best) return fail(r, ce);

    // A random competitor in Jx: forced coordinates fixed, free ones random in the box.
    const SelectionSpec spec = selection_spec(x);
    const Index len = std::max<Index>(x.max_index(), 14);
    std::vector<Rational> prefix;
    for (Index m = 1; m <= len; ++m) {
      const auto it = spec.forced.find(m);
      prefix.push_back(it != spec.forced.end() ? it->second : spec.radius * gen.rational(1));
    }
    const EvConstSeq other(std::move(prefix), spec.radius * gen.rational(1));
    if (!duality_map_contains(x, other) || sup_norm(gx + lambda * other - target) < best) return fail(r, ce);
  }
  return r;
}

SuiteResult lp_oracle(const Config& cfg, const OperatorTable&) {
  SuiteResult r;
  r.name = "lp-oracle";
  std::mt19937_64 rng(stream(cfg, 8));
  const std::size_t n = std::max<std::size_t>(50, cfg.cases / 20);
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const lp::Problem p = oracle::random_bounded_lp(rng);
    const lp::Solution s = lp::solve(p);
    const auto expected = oracle::vertex_enumeration(p);
    const bool ok = expected && s.status == lp::Status::Optimal && std::abs(s.objective - *expected) <= 1e-6 &&
                    lp::max_violation(p, s.values) <= 1e-7;
    if (!ok) {
      json rows = json::array();
      for (const auto& c : p.constraints) {
        rows.push_back({{"coeffs", c.coeffs}, {"eq", c.relation == lp::Relation::Equal}, {"bound", c.bound}});
      }
      return fail(r, json{{"objective", p.objective}, {"constraints", rows}});
    }
  }
  return r;
}

std::vector<SuiteResult> run_all(const Config& cfg, const OperatorTable& ops) {
  return {skewness(cfg, ops),       tail_law(cfg, ops),         boundedness(cfg, ops),  adjoint(cfg, ops),
          trz_identities(cfg, ops), w_identities(cfg, ops),     t_identity(cfg, ops),   prop3_membership(cfg, ops),
          duality_map(cfg, ops),    lp_oracle(cfg, ops)};
}

}  // namespace gossez::verify
