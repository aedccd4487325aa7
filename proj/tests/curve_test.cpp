#include <gtest/gtest.h>

#include "pairid/bytes.hpp"
#include "test_support.hpp"

namespace pairid::curve {
namespace {

// Point count by testing every (x, y) pair; shares no code with Curve::sqrt.
std::uint64_t count_points_naive(std::uint64_t q) {
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < q; ++x) {
    const std::uint64_t r = (x * x % q * x + x) % q;
    for (std::uint64_t y = 0; y < q; ++y) {
      if (y * y % q == r) ++n;
    }
  }
  return n;
}

TEST(Curve, PointCountMatchesNaiveCount) {
  for (std::uint64_t q : {7ULL, 11ULL, 19ULL, 59ULL, 83ULL, 523ULL}) {
    EXPECT_EQ(Curve(q).enumerate().size(), count_points_naive(q)) << "q=" << q;
    EXPECT_EQ(count_points_naive(q), q + 1);
  }
}

TEST(Curve, RejectsBadFieldPrimes) {
  EXPECT_ERRC(Curve(13), Errc::InvalidArgument);
  EXPECT_ERRC(Curve(15), Errc::InvalidArgument);
}

TEST(Curve, GroupLawOnAllPoints) {
  const Curve c(59);
  const auto pts = c.enumerate();
  for (const auto& P : pts) {
    EXPECT_TRUE(c.on_curve(P));
    EXPECT_TRUE(c.point_add(P, c.point_neg(P)).infinity);
    EXPECT_TRUE(c.point_mul(P, 60).infinity);
    for (const auto& Q : pts) {
      ASSERT_EQ(c.point_add(P, Q), c.point_add(Q, P));
      ASSERT_TRUE(c.on_curve(c.point_add(P, Q)));
    }
  }
  EXPECT_ERRC(c.point_add({1, 1, false}, pts[1]), Errc::NotOnCurve);
}

TEST(Curve, DistortionImageIsOnCurve) {
  const Curve c(83);
  for (const auto& P : c.enumerate()) {
    EXPECT_TRUE(c.on_curve(c.distortion(P)));
  }
}

TEST(Validation, SmallestShippedCurve) {
  const auto report = enumerate_and_validate(59);
  EXPECT_EQ(report.point_count, 60u);
  EXPECT_EQ(report.params.p, 5u);
  EXPECT_EQ(report.params.h, 12u);
  EXPECT_EQ(report.embedding_degree, 2u);
  const Curve c(59);
  EXPECT_TRUE(c.point_mul(report.params.generator, 5).infinity);
  EXPECT_FALSE(report.params.generator.infinity);
}

TEST(Validation, ShippedCurvesHaveExpectedOrders) {
  EXPECT_EQ(default_params(7).q, 83u);
  EXPECT_EQ(default_params(7).h, 12u);
  EXPECT_EQ(default_params(131).q, 523u);
  EXPECT_EQ(default_params(131).h, 4u);
  EXPECT_ERRC(default_params(11), Errc::InvalidArgument);
}

TEST(Validation, RejectsBadParameters) {
  EXPECT_ERRC(enumerate_and_validate(3), Errc::ValidationFailed);     // N = 4 has no prime factor >= 5
  EXPECT_ERRC(enumerate_and_validate(61), Errc::ValidationFailed);    // 1 mod 4
  EXPECT_ERRC(enumerate_and_validate(57), Errc::ValidationFailed);    // composite
  EXPECT_ERRC(enumerate_and_validate(10007), Errc::ValidationFailed); // too large
  EXPECT_ERRC(enumerate_and_validate(59, 3), Errc::ValidationFailed);
  EXPECT_ERRC(enumerate_and_validate(59, 7), Errc::ValidationFailed);

  CurveParams bad = default_params(5);
  bad.generator = Curve(59).point_neg(bad.generator);
  EXPECT_NO_THROW(validate_params(bad));
  bad.h = 11;
  EXPECT_ERRC(validate_params(bad), Errc::ValidationFailed);
  bad = default_params(5);
  bad.generator.y = (bad.generator.y + 1) % 59;
  EXPECT_ERRC(validate_params(bad), Errc::ValidationFailed);
}

TEST(Tate, ScalarMultiplesCombine) {
  for (std::uint64_t p : {5ULL, 7ULL, 131ULL}) {
    const TatePairing t(default_params(p));
    const Curve& c = t.curve();
    const auto G = t.params().generator;
    const auto egg = t.pair(G, G);
    EXPECT_EQ(t.pair(c.point_mul(G, 2), c.point_mul(G, 3)), c.pow(egg, 6));
    EXPECT_NE(egg, c.one());
    EXPECT_EQ(c.pow(egg, p), c.one());
  }
}

TEST(Tate, FullTableBilinearOnSmallCurve) {
  const TatePairing t(default_params(7));
  const Curve& c = t.curve();
  const auto G = t.params().generator;
  const auto egg = t.pair(G, G);
  for (std::uint64_t a = 0; a < 7; ++a) {
    for (std::uint64_t b = 0; b < 7; ++b) {
      EXPECT_EQ(t.pair(c.point_mul(G, a), c.point_mul(G, b)), c.pow(egg, a * b)) << a << "," << b;
    }
  }
}

TEST(Tate, OffsetAgreesWithDirectEvaluation) {
  const TatePairing t(default_params(131));
  const Curve& c = t.curve();
  const auto G = t.params().generator;
  Rng rng(7);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto P = c.point_mul(G, rng.nonzero_below(131));
    const auto Q = c.point_mul(G, rng.nonzero_below(131));
    const auto S = c.point_mul(G, rng.nonzero_below(131));
    const auto direct = t.miller_loop(P, Q);
    const auto shifted = t.pair_with_offset(P, Q, S);
    if (!direct || !shifted) continue;
    EXPECT_EQ(t.final_exponentiation(*direct), *shifted);
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Tate, PairIsDefinedOnEverySubgroupPair) {
  // Walks the whole order-7 subgroup, including pairs where the direct Miller
  // evaluation vanishes and the offset path is taken.
  const TatePairing t(default_params(7));
  const Curve& c = t.curve();
  const auto G = t.params().generator;
  for (std::uint64_t a = 1; a < 7; ++a) {
    for (std::uint64_t b = 1; b < 7; ++b) {
      EXPECT_NO_THROW(t.pair(c.point_mul(G, a), c.point_mul(G, b)));
    }
  }
}

TEST(CurveBackend, EncodingAndSignBit) {
  const auto suite = make_suite(algebra::BackendKind::TateCurve, 5);
  const auto g = suite.g1_generator();
  const Bytes enc = suite.encode(g);
  ASSERT_EQ(enc.size(), 3u);
  EXPECT_EQ(enc[0], 0x02 | (g.b & 1));
  Bytes flipped = enc;
  flipped[0] ^= 0x01;
  EXPECT_EQ(suite.decode_g1(flipped), suite.g1_inv(g));
  EXPECT_EQ(suite.encode(suite.g1_identity()), (Bytes{0x00, 0x00, 0x00}));

  Bytes bad_flag = enc;
  bad_flag[0] = 0x05;
  EXPECT_ERRC(suite.decode_g1(bad_flag), Errc::MalformedEncoding);
  EXPECT_ERRC(suite.decode_g1(Bytes{0x02, 0x00}), Errc::MalformedEncoding);
}

TEST(CurveBackend, DecodeRejectsOffCurveAndOffSubgroup) {
  const auto suite = make_suite(algebra::BackendKind::TateCurve, 5);
  const Curve c(59);
  bool saw_off_curve = false;
  bool saw_off_subgroup = false;
  for (std::uint64_t x = 0; x < 59; ++x) {
    Bytes enc{0x02};
    put_be(enc, x, 2);
    const bool on = c.sqrt(c.rhs(x)).has_value();
    try {
      const auto P = suite.decode_g1(enc);
      EXPECT_TRUE(suite.g1_valid(P));
    } catch (const Error& e) {
      if (!on) {
        EXPECT_EQ(e.code(), Errc::NotOnCurve);
        saw_off_curve = true;
      } else if (e.code() == Errc::NotInSubgroup) {
        saw_off_subgroup = true;
      }
    }
  }
  EXPECT_TRUE(saw_off_curve);
  EXPECT_TRUE(saw_off_subgroup);
}

TEST(CurveBackend, G2DecodeChecksSubgroup) {
  const auto suite = make_suite(algebra::BackendKind::TateCurve, 5);
  Bytes enc;
  put_be(enc, 2, 2);
  put_be(enc, 0, 2);
  EXPECT_ERRC(suite.decode_g2(enc), Errc::NotInSubgroup);
  EXPECT_ERRC(suite.decode_g2(Bytes{0, 0, 0}), Errc::MalformedEncoding);
}

TEST(SuiteRecord, RoundTripsBothBackends) {
  for (const auto& suite : pairid::testing::small_suites()) {
    std::map<std::string, std::string> fields;
    for (const auto& [k, v] : suite.backend().describe()) fields[k] = v;
    EXPECT_TRUE(suite_from_record(fields).same_algebra(suite));
  }
  EXPECT_ERRC(suite_from_record({{"backend", "tate-curve"}, {"q", "59"}}), Errc::BadRecord);
  EXPECT_ERRC(suite_from_record({{"backend", "transparent"}, {"p", "x11"}}), Errc::BadRecord);
}

}  // namespace
}  // namespace pairid::curve
