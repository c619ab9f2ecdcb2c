#include <gtest/gtest.h>

#include "gossez/errors.hpp"
#include "gossez/random.hpp"
#include "gossez/serialize.hpp"

namespace gossez {
namespace {

using nlohmann::json;

Rational q(long p, long d = 1) { return Rational(p, d); }

TEST(Serialize, SparseSeqWireFormat) {
  const SparseSeq x{{1, q(3, 2)}, {7, q(-1, 3)}};
  EXPECT_EQ(json(x), json::parse(R"({"entries": {"1": "3/2", "7": "-1/3"}})"));
  EXPECT_EQ(decode_json<SparseSeq>(R"({"entries": {"1": "3/2", "7": "-1/3"}})"), x);
  // Zero entries are accepted on input but not stored.
  EXPECT_EQ(decode_json<SparseSeq>(R"({"entries": {"2": "0", "7": "-2/6"}})"), (SparseSeq{{7, q(-1, 3)}}));
}

TEST(Serialize, EvConstSeqWireFormat) {
  const EvConstSeq y({q(1), q(-3)}, q(0));
  EXPECT_EQ(json(y), json::parse(R"({"prefix": ["1", "-3"], "tail": "0"})"));
  // Decoding canonicalizes.
  EXPECT_EQ(decode_json<EvConstSeq>(R"({"prefix": ["1", "5", "5"], "tail": "5"})"), EvConstSeq({q(1)}, q(5)));
}

TEST(Serialize, BidualElemWireFormat) {
  const BidualElem xss{SparseSeq{{2, q(4)}}, q(-1, 2)};
  EXPECT_EQ(json(xss), json::parse(R"({"w": {"entries": {"2": "4"}}, "alpha": "-1/2"})"));
  EXPECT_EQ(decode_json<BidualElem>(R"({"w": {"entries": {}}, "alpha": "1"})"), x0_star_star());
}

TEST(Serialize, RoundTripProperty) {
  RandomValues gen(41);
  for (int i = 0; i < 300; ++i) {
    const SparseSeq x = gen.sparse();
    const EvConstSeq y = gen.ev_const();
    const BidualElem b = gen.bidual();
    ASSERT_EQ(decode_json<SparseSeq>(json(x).dump()), x);
    ASSERT_EQ(decode_json<EvConstSeq>(json(y).dump()), y);
    ASSERT_EQ(decode_json<BidualElem>(json(b).dump()), b);
  }
}

TEST(Serialize, ProbeResultRoundTrip) {
  const ProbeResult r = probe_exact(2.0, 3, neg_e_star());
  const json j = r;
  for (const char* key : {"lambda", "dim", "estimate", "certificate_x", "certificate_selection", "lower_bound",
                          "method", "patterns_explored", "seed", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  const ProbeResult back = decode_json<ProbeResult>(j.dump());
  EXPECT_EQ(back.lambda, r.lambda);
  EXPECT_EQ(back.estimate, r.estimate);
  EXPECT_EQ(back.certificate_x, r.certificate_x);
  EXPECT_EQ(back.certificate_selection, r.certificate_selection);
  EXPECT_EQ(back.pattern, r.pattern);
  EXPECT_EQ(back.method, r.method);
  EXPECT_EQ(back.target, r.target);
}

TEST(Serialize, Malformed) {
  const char* bad_sparse[] = {
      "not json",
      R"([])",
      R"({"entries": []})",
      R"({"entries": {"0": "1"}})",
      R"({"entries": {"x": "1"}})",
      R"({"entries": {"1": 3}})",
      R"({"entries": {"1": "1/0"}})",
      R"({})",
  };
  for (const char* text : bad_sparse) EXPECT_THROW(decode_json<SparseSeq>(text), ParseError) << text;
  EXPECT_THROW(decode_json<EvConstSeq>(R"({"prefix": ["1"]})"), ParseError);
  EXPECT_THROW(decode_json<EvConstSeq>(R"({"prefix": "1", "tail": "0"})"), ParseError);
  EXPECT_THROW(decode_json<BidualElem>(R"({"w": {"entries": {}}})"), ParseError);
  EXPECT_THROW(decode_json<ProbeResult>(R"({"lambda": 1})"), ParseError);
}

}  // namespace
}  // namespace gossez
