#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gossez/duality.hpp"
#include "gossez/errors.hpp"
#include "gossez/probe.hpp"
#include "verify/oracles.hpp"

namespace gossez {
namespace {

// Bisection on 1/4 lambda (1 + d/lambda)^2 + d = 1 carried out at 30 digits,
// rounded to binary64.
constexpr double kD1 = 0.464101615137754587054892683012;
constexpr double kD2 = 0.324555320336758663997787088866;
constexpr double kDHalf = 0.5;
constexpr double kD3 = 0.165151389911680013176094387456;

// Regression value: probe_exact(lambda = 1, n = 6, -e*), computed once by this
// build and cross-checked with Nelder-Mead on the clamped residual.
constexpr double kProbeLambda1Dim6 = 1.0;

Rational q(long p, long d = 1) { return Rational(p, d); }

TEST(TheoremABound, Examples) {
  EXPECT_EQ(theorem_a_bound(4.0, 1.0), 1.0);
  EXPECT_EQ(theorem_a_bound(1.0, 0.0), 0.0);
  EXPECT_EQ(theorem_a_bound(2.0, 3.0), 4.5);
  EXPECT_THROW(theorem_a_bound(0.0, 1.0), DomainError);
  EXPECT_THROW(theorem_a_bound(1.0, -1.0), DomainError);
}

TEST(DistanceLowerBound, FrozenBisectionValues) {
  EXPECT_NEAR(distance_lower_bound(1.0), kD1, 1e-15);
  EXPECT_NEAR(distance_lower_bound(1.0), 2.0 * std::sqrt(3.0) - 3.0, 1e-15);
  EXPECT_NEAR(distance_lower_bound(2.0), kD2, 1e-15);
  EXPECT_NEAR(distance_lower_bound(2.0), std::sqrt(40.0) - 6.0, 1e-15);
  EXPECT_NEAR(distance_lower_bound(0.5), kDHalf, 1e-15);
  EXPECT_NEAR(distance_lower_bound(3.0), kD3, 1e-15);
  EXPECT_EQ(distance_lower_bound(4.0), 0.0);
}

TEST(DistanceLowerBound, MatchesBinary64Bisection) {
  for (double lambda : {0.01, 0.3, 1.0, 1.7, 2.0, 3.99}) {
    EXPECT_NEAR(distance_lower_bound(lambda), oracle::bisect_distance_bound(lambda), 1e-12) << lambda;
  }
}

TEST(DistanceLowerBound, Domain) {
  EXPECT_THROW(distance_lower_bound(0.0), DomainError);
  EXPECT_THROW(distance_lower_bound(-1.0), DomainError);
  EXPECT_THROW(distance_lower_bound(4.0000001), DomainError);
  EXPECT_THROW(distance_lower_bound(std::nan("")), DomainError);
}

TEST(DistanceLowerBound, DefiningEquationAndPositivity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1e-6, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double lambda = u(rng);
    const double d = distance_lower_bound(lambda);
    if (lambda < 4.0) ASSERT_GT(d, 0.0) << lambda;
    ASSERT_NEAR(consistency_slack(lambda, d), 0.0, 1e-12) << lambda;
  }
}

TEST(DistanceLowerBound, AmGmStep) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    const double z = u(rng);
    ASSERT_LE(-a * a + z * a, 0.25 * z * z + 1e-9 * (1.0 + z * z));
  }
}

TEST(PatternLp, Prop3Instance) {
  const auto s = pattern_lp({1, -1}, 1.0, EvConstSeq({q(1), q(-3)}, q(0)));
  EXPECT_NEAR(s.value, 0.0, 1e-9);
  EXPECT_NEAR(s.x[0], 1.0, 1e-9);
  EXPECT_NEAR(s.x[1], -1.0, 1e-9);
}

TEST(PatternLp, ZeroPatternIsSupNormOfTarget) {
  for (double lambda : {0.5, 1.0, 3.0}) {
    const auto s = pattern_lp({0}, lambda, neg_e_star());
    EXPECT_NEAR(s.value, 1.0, 1e-12);
    EXPECT_EQ(s.x[0], 0.0);
  }
  const auto s = pattern_lp({0, 0, 0}, 1.0, EvConstSeq({q(0), q(5, 2)}, q(-1)));
  EXPECT_NEAR(s.value, 2.5, 1e-12);
}

TEST(PatternLp, NegativeSingleton) {
  // max(|1 - a|, 1) over a >= 0.
  EXPECT_NEAR(pattern_lp({-1}, 1.0, neg_e_star()).value, 1.0, 1e-12);
  // lambda = 2: max(|1 - 2a|, 1 - a) is minimized at a = 2/3.
  const auto s = pattern_lp({-1}, 2.0, neg_e_star());
  EXPECT_NEAR(s.value, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(s.x[0], -2.0 / 3.0, 1e-9);
}

TEST(PatternLp, Validation) {
  EXPECT_THROW(pattern_lp({1}, 0.0, neg_e_star()), DomainError);
  EXPECT_THROW(pattern_lp({2}, 1.0, neg_e_star()), DomainError);
}

TEST(PatternLp, AgreesWithExactResidualAtSolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    SignPattern sigma(1 + rng() % 5);
    for (auto& s : sigma) s = static_cast<int>(rng() % 3) - 1;
    const double lambda = 0.25 + static_cast<double>(rng() % 16) / 4.0;
    const auto sol = pattern_lp(sigma, lambda, neg_e_star());
    SparseSeq x;
    for (std::size_t m = 0; m < sigma.size(); ++m) {
      if (sol.x[m] != 0.0) x.set(m + 1, Rational::from_double(sol.x[m]));
    }
    const double exact = clamped_residual(x, Rational::from_double(lambda), neg_e_star()).to_double();
    // The clamp treats x_m = 0 as free, which can only help.
    ASSERT_LE(exact, sol.value + 1e-9);
  }
}

TEST(ProbeExact, Examples) {
  const ProbeResult one = probe_exact(1.0, 1, neg_e_star());
  EXPECT_EQ(one.estimate, 1.0);
  EXPECT_EQ(one.patterns_explored, 3U);
  EXPECT_EQ(one.method, ProbeMethod::Exact);

  const ProbeResult prop3 = probe_exact(1.0, 2, EvConstSeq({q(1), q(-3)}, q(0)));
  EXPECT_NEAR(prop3.estimate, 0.0, 1e-9);
  EXPECT_EQ(prop3.pattern, (SignPattern{1, -1}));
  EXPECT_EQ(prop3.lower_bound, 0.0);

  const ProbeResult six = probe_exact(1.0, 6, neg_e_star());
  EXPECT_GE(six.estimate, kD1 - 1e-9);
  EXPECT_LE(six.estimate, 1.0);
  EXPECT_NEAR(six.estimate, kProbeLambda1Dim6, 1e-9);
  EXPECT_EQ(six.patterns_explored, 729U);
}

TEST(ProbeExact, DimensionRange) {
  EXPECT_THROW(probe_exact(1.0, 0, neg_e_star()), DomainError);
  EXPECT_THROW(probe_exact(1.0, 13, neg_e_star()), DomainError);
  EXPECT_THROW(probe_exact(0.0, 2, neg_e_star()), DomainError);
}

TEST(ProbeExact, AntitoneInDimension) {
  for (double lambda : {0.5, 1.0, 2.0, 4.0}) {
    double prev = probe_exact(lambda, 1, neg_e_star()).estimate;
    for (std::size_t n = 2; n <= 6; ++n) {
      const double cur = probe_exact(lambda, n, neg_e_star()).estimate;
      ASSERT_LE(cur, prev + 1e-9) << lambda << " " << n;
      prev = cur;
    }
  }
}

TEST(ProbeExact, ThreadCountDoesNotChangeResult) {
  const EvConstSeq target({q(1, 2), q(-3), q(2)}, q(-1));
  ProbeResult a = probe_exact(0.75, 5, target, ProbeOptions{1});
  ProbeResult b = probe_exact(0.75, 5, target, ProbeOptions{3});
  a.runtime_ms = b.runtime_ms = 0;
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.pattern, b.pattern);
  EXPECT_EQ(a.certificate_x, b.certificate_x);
  EXPECT_EQ(a.certificate_selection, b.certificate_selection);
}

TEST(ProbeExact, TieBreakIsLexicographicallySmallest) {
  // At lambda = 1 every pattern starting with -1 reaches 1, including all -1.
  const ProbeResult r = probe_exact(1.0, 3, neg_e_star());
  EXPECT_EQ(r.pattern, (SignPattern{-1, -1, -1}));
}

TEST(ProbeExact, KnownMinimaAcrossLambda) {
  // Closed-form n = 1 optimum: max(|1 - lambda a|, 1 - (lambda - 1) a) minimized.
  EXPECT_NEAR(probe_exact(2.0, 1, neg_e_star()).estimate, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(probe_exact(4.0, 1, neg_e_star()).estimate, 1.0 / 7.0, 1e-9);
  EXPECT_NEAR(probe_exact(0.5, 3, neg_e_star()).estimate, 2.0 / 3.0, 1e-9);
}

TEST(ProbeResult, CertificatesReproduceEstimate) {
  const EvConstSeq targets[] = {neg_e_star(), EvConstSeq({q(1), q(-3)}, q(0)), EvConstSeq({q(2), q(0), q(-1, 2)}, q(1))};
  for (const auto& target : targets) {
    for (double lambda : {0.5, 1.0, 2.5, 4.0}) {
      const ProbeResult r = probe_exact(lambda, 4, target);
      ASSERT_GE(r.estimate, 0.0);
      ASSERT_NEAR(certificate_residual(r), r.estimate, 1e-6);
      ASSERT_TRUE(duality_map_contains(r.certificate_x, r.certificate_selection));
      if (target == neg_e_star()) {
        ASSERT_TRUE(theorem_consistency_check(r));
        ASSERT_GE(r.estimate, r.lower_bound - 1e-9);
      }
    }
  }
}

TEST(ProbeHeuristic, MatchesExactWhenBudgetCoversAllPatterns) {
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const ProbeResult h = probe_heuristic(lambda, n, neg_e_star(), 2000, 42);
      const ProbeResult e = probe_exact(lambda, n, neg_e_star());
      ASSERT_NEAR(h.estimate, e.estimate, 1e-6);
      ASSERT_EQ(h.patterns_explored, e.patterns_explored);
    }
  }
}

TEST(ProbeHeuristic, BudgetOneEvaluatesOnePattern) {
  const ProbeResult r = probe_heuristic(1.5, 6, neg_e_star(), 1, 9);
  EXPECT_EQ(r.patterns_explored, 1U);
  EXPECT_EQ(r.estimate, std::max(0.0, pattern_lp(r.pattern, 1.5, neg_e_star()).value));
}

TEST(ProbeHeuristic, DeterministicGivenSeed) {
  ProbeResult a = probe_heuristic(1.0, 9, neg_e_star(), 150, 7);
  ProbeResult b = probe_heuristic(1.0, 9, neg_e_star(), 150, 7);
  a.runtime_ms = b.runtime_ms = 0;
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.pattern, b.pattern);
  EXPECT_EQ(a.certificate_x, b.certificate_x);
  EXPECT_EQ(a.patterns_explored, 150U);
  EXPECT_EQ(a.seed, 7U);
}

TEST(ProbeHeuristic, NeverBelowExact) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ProbeResult h = probe_heuristic(0.5, 6, neg_e_star(), 60, seed);
    ASSERT_GE(h.estimate, probe_exact(0.5, 6, neg_e_star()).estimate - 1e-9);
  }
}

TEST(ProbeHeuristic, Validation) {
  EXPECT_THROW(probe_heuristic(1.0, 3, neg_e_star(), 0, 1), DomainError);
  EXPECT_THROW(probe_heuristic(1.0, 0, neg_e_star(), 10, 1), DomainError);
  EXPECT_THROW(probe_heuristic(1.0, 41, neg_e_star(), 10, 1), DomainError);
}

TEST(TheoremConsistency, Examples) {
  ProbeResult r;
  r.lambda = 1.0;
  r.target = neg_e_star();
  r.estimate = 1.0;
  EXPECT_TRUE(theorem_consistency_check(r));
  r.estimate = distance_lower_bound(1.0);
  EXPECT_TRUE(theorem_consistency_check(r));
  EXPECT_NEAR(consistency_slack(1.0, r.estimate), 0.0, 1e-9);
  r.estimate = 0.1;
  EXPECT_FALSE(theorem_consistency_check(r));
  r.target = e_star();
  EXPECT_THROW(theorem_consistency_check(r), DomainError);
}

TEST(ProbeLowerBound, OnlyForNegEStar) {
  EXPECT_EQ(probe_lower_bound(1.0, neg_e_star()), distance_lower_bound(1.0));
  EXPECT_EQ(probe_lower_bound(1.0, e_star()), 0.0);
  EXPECT_EQ(probe_lower_bound(5.0, neg_e_star()), 0.0);
}

}  // namespace
}  // namespace gossez
