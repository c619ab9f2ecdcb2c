#include <gtest/gtest.h>

#include "gossez/errors.hpp"
#include "gossez/random.hpp"
#include "gossez/rational.hpp"
#include "gossez/sequence.hpp"

namespace gossez {
namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

TEST(Rational, ReducedAndSigned) {
  EXPECT_EQ(q(6, -4).str(), "-3/2");
  EXPECT_EQ(q(0, 7).str(), "0");
  EXPECT_EQ(Rational::parse("10/4"), q(5, 2));
  EXPECT_EQ(Rational::parse("-3"), q(-3));
  EXPECT_EQ(Rational::parse("+1/3"), q(1, 3));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/-2", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.375), q(3, 8));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
  EXPECT_THROW(Rational::from_double(1.0 / 0.0), DomainError);
  EXPECT_THROW(q(1) / q(0), DomainError);
}

TEST(L1Norm, Examples) {
  EXPECT_EQ(l1_norm(SparseSeq{}), q(0));
  EXPECT_EQ(l1_norm(SparseSeq{{1, q(1)}, {2, q(-1)}}), q(2));
  EXPECT_EQ(l1_norm(SparseSeq{{4, q(3, 2)}, {7, q(-1, 3)}}), q(11, 6));
}

TEST(SupNorm, Examples) {
  EXPECT_EQ(sup_norm(e_star()), q(1));
  EXPECT_EQ(sup_norm(EvConstSeq({q(1), q(-3)}, q(0))), q(3));
  EXPECT_EQ(sup_norm(EvConstSeq({}, q(-1))), q(1));
}

TEST(Pair0, Examples) {
  const SparseSeq x{{1, q(1)}, {2, q(-1)}};
  EXPECT_EQ(pair0(x, EvConstSeq({q(2), q(-2)}, q(0))), q(4));
  EXPECT_EQ(pair0(SparseSeq{}, EvConstSeq({q(5)}, q(3))), q(0));
  // Against e* the pairing is the plain sum.
  const SparseSeq y{{3, q(5, 2)}, {9, q(-7)}, {100, q(1, 3)}};
  EXPECT_EQ(pair0(y, e_star()), total(y));
  EXPECT_EQ(pair0(y, e_star()), q(5, 2) - q(7) + q(1, 3));
}

TEST(Limit, Examples) {
  EXPECT_EQ(limit(e_star()), q(1));
  EXPECT_EQ(limit(EvConstSeq({q(5), q(7)}, q(-2))), q(-2));
}

TEST(Arithmetic, Examples) {
  const EvConstSeq zero = e_star() - e_star();
  EXPECT_TRUE(zero.prefix().empty());
  EXPECT_EQ(zero.tail(), q(0));

  EXPECT_EQ(q(2) * SparseSeq({{1, q(1)}, {2, q(-1)}}), (SparseSeq{{1, q(2)}, {2, q(-2)}}));

  const EvConstSeq sum = EvConstSeq({q(1), q(-3)}, q(0)) + EvConstSeq({q(0), q(3)}, q(0));
  EXPECT_EQ(sum.prefix(), std::vector<Rational>{q(1)});
  EXPECT_EQ(sum.tail(), q(0));
}

TEST(Arithmetic, SparseDropsCancelledEntries) {
  const SparseSeq a{{2, q(3)}, {5, q(1)}};
  const SparseSeq b{{2, q(3)}};
  EXPECT_EQ((a - b).entries().size(), 1U);
  EXPECT_EQ((a - a).support_size(), 0U);
  EXPECT_TRUE((q(0) * a).empty());
  EXPECT_EQ(-(-a), a);
}

TEST(Basis, Examples) {
  EXPECT_EQ(e_star(), EvConstSeq({}, q(1)));
  EXPECT_EQ(e_m(3), EvConstSeq({q(0), q(0), q(1)}, q(0)));
  EXPECT_EQ(e_m(3).length(), 3U);
  EXPECT_EQ(point_mass(2, q(-1)), (SparseSeq{{2, q(-1)}}));
  EXPECT_THROW(e_m(0), DomainError);
  EXPECT_THROW(point_mass(0, q(1)), DomainError);
  SparseSeq x;
  EXPECT_THROW(x.set(0, q(1)), DomainError);
}

TEST(EvConstSeq, CanonicalFormIsUnique) {
  // Same sequence written with different redundant prefixes.
  const EvConstSeq a({q(1), q(2), q(2), q(2)}, q(2));
  const EvConstSeq b({q(1)}, q(2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.length(), 1U);
  EXPECT_EQ(EvConstSeq({q(0), q(0)}, q(0)).length(), 0U);
  EXPECT_NE(EvConstSeq({q(1)}, q(0)), EvConstSeq({q(1)}, q(1)));
}

TEST(SeqProperties, NormNonnegativeZeroIffEmpty) {
  RandomValues gen(11);
  for (int i = 0; i < 1000; ++i) {
    const SparseSeq x = gen.sparse();
    EXPECT_GE(l1_norm(x), q(0));
    EXPECT_EQ(l1_norm(x).is_zero(), x.empty());
  }
}

TEST(SeqProperties, HoelderInequality) {
  RandomValues gen(12);
  for (int i = 0; i < 1000; ++i) {
    const SparseSeq x = gen.sparse();
    const EvConstSeq y = gen.ev_const(30);
    ASSERT_LE(abs(pair0(x, y)), l1_norm(x) * sup_norm(y));
  }
}

TEST(SeqProperties, LimitIsLinear) {
  RandomValues gen(13);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(10);
    const EvConstSeq y = gen.ev_const();
    const EvConstSeq z = gen.ev_const();
    ASSERT_EQ(limit(a * y + z), a * limit(y) + limit(z));
  }
}

TEST(SeqProperties, StructuralEqualityMatchesPointwise) {
  RandomValues gen(14);
  for (int i = 0; i < 500; ++i) {
    const EvConstSeq y = gen.ev_const(6, 2, 1);
    const EvConstSeq z = gen.ev_const(6, 2, 1);
    bool same = y.tail() == z.tail();
    for (Index m = 1; m <= 8 && same; ++m) same = y.at(m) == z.at(m);
    ASSERT_EQ(same, y == z);
  }
}

}  // namespace
}  // namespace gossez
