#include <gtest/gtest.h>

#include "pairid/algebra/transparent.hpp"
#include "pairid/bytes.hpp"
#include "test_support.hpp"

namespace pairid::algebra {
namespace {

// Inverse by exhaustive search; independent of the extended-Euclid path.
std::uint64_t brute_inverse(std::uint64_t x, std::uint64_t p) {
  for (std::uint64_t y = 1; y < p; ++y) {
    if (x * y % p == 1) return y;
  }
  return 0;
}

TEST(Scalar, InverseExamples) {
  EXPECT_EQ(brute_inverse(10, 11), 10u);
  EXPECT_EQ(scalar_inv(Scalar(10, 11)).value(), 10u);
  EXPECT_EQ(scalar_inv(Scalar(1, 11)).value(), 1u);
  EXPECT_ERRC(scalar_inv(Scalar(0, 11)), Errc::ZeroInverse);
}

TEST(Scalar, InverseMatchesBruteForce) {
  for (std::uint64_t p : {5ULL, 11ULL, 31ULL, 1009ULL}) {
    for (std::uint64_t x = 1; x < p; ++x) {
      const Scalar inv = Scalar(x, p).inverse();
      EXPECT_EQ(inv.value(), brute_inverse(x, p)) << "p=" << p << " x=" << x;
      EXPECT_EQ((Scalar(x, p) * inv).value(), 1u);
    }
  }
}

TEST(Scalar, ArithmeticWraps) {
  const Scalar a(7, 11);
  const Scalar b(9, 11);
  EXPECT_EQ((a + b).value(), 5u);
  EXPECT_EQ((a - b).value(), 9u);
  EXPECT_EQ((a * b).value(), 8u);
  EXPECT_EQ((-a).value(), 4u);
  EXPECT_EQ(Scalar::from_signed(-6, 11).value(), 5u);
  EXPECT_EQ((a / b * b), a);
}

TEST(NumberTheory, PrimalityAndFactors) {
  EXPECT_TRUE(is_prime(10007));
  EXPECT_TRUE(is_prime(1009));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(10001));  // 73 * 137
  EXPECT_EQ(prime_factors(60), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_factors(524), (std::vector<std::uint64_t>{2, 131}));
}

TEST(Transparent, RejectsNonPrimeOrTinyModulus) {
  EXPECT_ERRC(make_transparent_suite(12), Errc::InvalidArgument);
  EXPECT_ERRC(make_transparent_suite(3), Errc::InvalidArgument);
  EXPECT_NO_THROW(make_transparent_suite(5));
}

TEST(Transparent, ExponentiationExample) {
  const auto suite = make_transparent_suite(11);
  EXPECT_EQ(suite.g1_exp(transparent_g1(3), suite.scalar(4)), transparent_g1(1));
}

TEST(Transparent, PairingIsExponentProduct) {
  const auto suite = make_transparent_suite(11);
  EXPECT_EQ(suite.pairing(transparent_g1(4), transparent_g1(3)), transparent_g2(1));
  EXPECT_EQ(suite.pairing(suite.g1_identity(), transparent_g1(3)), suite.g2_identity());
  EXPECT_EQ(suite.g2_generator(), transparent_g2(1));
}

TEST(Transparent, EncodingExample) {
  const auto suite = make_transparent_suite(11);
  const Bytes enc = suite.encode(transparent_g1(7));
  EXPECT_EQ(enc, (Bytes{0x00, 0x07}));
  EXPECT_EQ(suite.decode_g1(enc), transparent_g1(7));
  EXPECT_ERRC(suite.decode_g1(Bytes{0x07}), Errc::MalformedEncoding);
  EXPECT_ERRC(suite.decode_g1(Bytes{0x00, 0x0b}), Errc::MalformedEncoding);
  EXPECT_ERRC(suite.decode_scalar(Bytes{0x00}), Errc::MalformedEncoding);
}

TEST(Transparent, EncodingRoundTripExhaustive) {
  for (std::uint64_t p : {5ULL, 11ULL, 257ULL, 1009ULL}) {
    const auto suite = make_transparent_suite(p);
    for (std::uint64_t e = 0; e < p; ++e) {
      ASSERT_EQ(suite.decode_g1(suite.encode(transparent_g1(e))), transparent_g1(e));
      ASSERT_EQ(suite.decode_g2(suite.encode(transparent_g2(e))), transparent_g2(e));
      ASSERT_EQ(suite.decode_scalar(suite.encode(suite.scalar(e))), suite.scalar(e));
      ASSERT_EQ(suite.encode(transparent_g1(e)).size(), scalar_width(p));
    }
  }
}

TEST(Transparent, NonDegeneracyByBruteForce) {
  for (std::uint64_t p : {11ULL, 1009ULL, 10007ULL}) {
    const auto suite = make_transparent_suite(p);
    const auto egg = suite.pairing(suite.g1_generator(), suite.g1_generator());
    EXPECT_EQ(g2_order_bruteforce(suite, egg), p);
    EXPECT_EQ(g1_order_bruteforce(suite, suite.g1_generator()), p);
  }
}

TEST(Ddh, Examples) {
  const auto suite = make_transparent_suite(11);
  const auto g = suite.g1_generator();
  EXPECT_TRUE(ddh_solve(suite, g, transparent_g1(2), transparent_g1(3), transparent_g1(6)));
  EXPECT_TRUE(ddh_solve(suite, g, g, g, g));
  EXPECT_FALSE(ddh_solve(suite, g, transparent_g1(2), transparent_g1(3), transparent_g1(5)));
}

TEST(Ddh, AgreesWithPredicateExhaustively) {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL}) {
    const auto suite = make_transparent_suite(p);
    const auto g = suite.g1_generator();
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) {
          const bool expected = (a * b) % p == c;
          ASSERT_EQ(ddh_solve(suite, g, suite.g1_exp(g, suite.scalar(a)), suite.g1_exp(g, suite.scalar(b)),
                              suite.g1_exp(g, suite.scalar(c))),
                    expected)
              << "p=" << p << " a=" << a << " b=" << b << " c=" << c;
        }
  }
}

class BackendLaws : public ::testing::TestWithParam<int> {
 protected:
  GroupSuite suite() const { return pairid::testing::small_suites().at(static_cast<std::size_t>(GetParam())); }
};

TEST_P(BackendLaws, GroupLawsOnRandomSamples) {
  const auto s = suite();
  Rng rng(100 + static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 300; ++i) {
    const auto x = s.random_g1(rng), y = s.random_g1(rng), z = s.random_g1(rng);
    EXPECT_EQ(s.g1_mul(s.g1_mul(x, y), z), s.g1_mul(x, s.g1_mul(y, z)));
    EXPECT_EQ(s.g1_mul(x, y), s.g1_mul(y, x));
    EXPECT_EQ(s.g1_mul(x, s.g1_identity()), x);
    EXPECT_EQ(s.g1_mul(x, s.g1_inv(x)), s.g1_identity());
    EXPECT_EQ(s.backend().g1_pow(x, s.p()), s.g1_identity());
    EXPECT_EQ(s.backend().g1_pow(x, 0), s.g1_identity());
    EXPECT_TRUE(s.g1_valid(x));

    const auto u = s.random_g2(rng), v = s.random_g2(rng), w = s.random_g2(rng);
    EXPECT_EQ(s.g2_mul(s.g2_mul(u, v), w), s.g2_mul(u, s.g2_mul(v, w)));
    EXPECT_EQ(s.g2_mul(u, v), s.g2_mul(v, u));
    EXPECT_EQ(s.g2_mul(u, s.g2_inv(u)), s.g2_identity());
    EXPECT_EQ(s.backend().g2_pow(u, s.p()), s.g2_identity());
    EXPECT_TRUE(s.g2_valid(u));
  }
}

TEST_P(BackendLaws, Bilinearity) {
  const auto s = suite();
  Rng rng(200 + static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 1000; ++i) {
    const auto x = s.random_g1(rng), y = s.random_g1(rng);
    const auto a = s.random_scalar(rng), b = s.random_scalar(rng);
    ASSERT_EQ(s.pairing(s.g1_exp(x, a), s.g1_exp(y, b)), s.g2_exp(s.pairing(x, y), a * b));
    ASSERT_EQ(s.pairing(s.g1_mul(x, y), x), s.g2_mul(s.pairing(x, x), s.pairing(y, x)));
  }
}

TEST_P(BackendLaws, NonDegenerate) {
  const auto s = suite();
  const auto egg = s.pairing(s.g1_generator(), s.g1_generator());
  EXPECT_EQ(g2_order_bruteforce(s, egg), s.p());
  EXPECT_EQ(s.pairing(s.g1_identity(), s.g1_generator()), s.g2_identity());
}

TEST_P(BackendLaws, EncodingRoundTripAllElements) {
  const auto s = suite();
  auto x = s.g1_identity();
  auto u = s.g2_identity();
  for (std::uint64_t k = 0; k < s.p(); ++k) {
    ASSERT_EQ(s.encode(x).size(), s.g1_size());
    ASSERT_EQ(s.decode_g1(s.encode(x)), x);
    ASSERT_EQ(s.decode_g2(s.encode(u)), u);
    x = s.g1_mul(x, s.g1_generator());
    u = s.g2_mul(u, s.g2_generator());
  }
}

INSTANTIATE_TEST_SUITE_P(AllBackends, BackendLaws, ::testing::Range(0, 5));

TEST(Counters, OnlyCountedSuitesCharge) {
  const auto suite = make_transparent_suite(11);
  CostCounter counter;
  const auto prover = suite.counted(counter, Role::Prover);
  const auto verifier = suite.counted(counter, Role::Verifier);
  const auto g = suite.g1_generator();
  suite.g1_exp(g, suite.scalar(3));
  suite.pairing(g, g);
  EXPECT_EQ(counter.prover, OpCounts{});
  prover.g1_exp(g, suite.scalar(3));
  prover.g2_exp(suite.g2_generator(), suite.scalar(3));
  verifier.pairing(g, g);
  verifier.pairing(g, g);
  prover.g1_mul(g, g);
  EXPECT_EQ(counter.prover, (OpCounts{1, 1, 0}));
  EXPECT_EQ(counter.verifier, (OpCounts{0, 0, 2}));
  counter.reset();
  EXPECT_EQ(counter.verifier, OpCounts{});
}

TEST(Bytes, HexAndWidth) {
  EXPECT_EQ(to_hex(Bytes{0x00, 0xab}), "00ab");
  EXPECT_EQ(from_hex("00AB"), (Bytes{0x00, 0xab}));
  EXPECT_ERRC(from_hex("abc"), Errc::MalformedEncoding);
  EXPECT_ERRC(from_hex("zz"), Errc::MalformedEncoding);
  EXPECT_EQ(scalar_width(11), 2u);
  EXPECT_EQ(scalar_width(10007), 2u);
  EXPECT_EQ(scalar_width(70001), 3u);
}

}  // namespace
}  // namespace pairid::algebra
