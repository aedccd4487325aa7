#include <gtest/gtest.h>

#include "pairid/session/crosscheck.hpp"
#include "pairid/algebra/transparent.hpp"
#include "pairid/id/session.hpp"
#include "pairid/sig/signatures.hpp"
#include "pairid/stats.hpp"
#include "test_support.hpp"

namespace pairid::id {
namespace {

using algebra::BackendKind;
using algebra::make_transparent_suite;
using algebra::transparent_g1;
using algebra::transparent_g2;
using algebra::transparent_log;

std::uint64_t lg(const GroupSuite& s, const G1Element& x) { return transparent_log(s, x).value(); }
std::uint64_t lg(const GroupSuite& s, const G2Element& x) { return transparent_log(s, x).value(); }

TEST(WorkedExamples, Cdhid) {
  const auto s = make_transparent_suite(11);
  const CdhidPublic pk{transparent_g1(4)};
  const CdhidSecret sk{s.scalar(4)};
  const auto sigma = cdhid_respond(s, sk, transparent_g1(3));
  EXPECT_EQ(lg(s, sigma), 1u);
  EXPECT_TRUE(cdhid_verify(s, pk, transparent_g1(3), sigma));
  EXPECT_FALSE(cdhid_verify(s, pk, transparent_g1(3), s.g1_mul(sigma, s.g1_generator())));
  EXPECT_EQ(cdhid_respond(s, sk, s.g1_generator()), pk.v);
  EXPECT_ERRC(cdhid_respond(s, sk, s.g1_identity()), Errc::IdentityChallenge);
}

TEST(WorkedExamples, Blsid) {
  const auto s = make_transparent_suite(11);
  const BlsidPublic pk{transparent_g1(4), 8, sig::HashMode::TestVector, 0};
  const BlsidSecret sk{s.scalar(4)};
  const BitString M{7, 8};
  const auto sigma = blsid_respond(s, pk, sk, M);
  EXPECT_EQ(lg(s, sigma), 6u);
  EXPECT_TRUE(blsid_verify(s, pk, M, sigma));
  EXPECT_ERRC(blsid_respond(s, pk, sk, BitString{7, 4}), Errc::BadChallengeLength);
}

TEST(WorkedExamples, Sdhid) {
  const auto s = make_transparent_suite(11);
  const SdhidPublic pk{transparent_g1(2), transparent_g1(3), transparent_g2(1)};
  EXPECT_TRUE(sdhid_verify(s, pk, s.scalar(4), transparent_g1(10), s.scalar(5)));
  EXPECT_FALSE(sdhid_verify(s, pk, s.scalar(4), s.g1_identity(), s.scalar(5)));
  EXPECT_FALSE(sdhid_verify(s, pk, s.scalar(4), transparent_g1(10), s.scalar(6)));
}

TEST(WorkedExamples, Owfid) {
  const auto s = make_transparent_suite(11);
  // v = exp(-(2*3) - 5*4) = exp(-26) = exp 7.
  const OwfidPublic pk{transparent_g1(2), transparent_g2(5), transparent_g2(7)};
  const OwfidSecret sk{transparent_g1(3), s.scalar(4)};
  ASSERT_TRUE(key_consistent(s, {SchemeId::OWFID, pk, sk}));

  const auto c = owfid_commit_with(s, pk, {transparent_g1(1), s.scalar(2)});
  EXPECT_EQ(lg(s, c.x), 1u);
  const auto r = owfid_respond(s, sk, c.witness, s.scalar(3));
  EXPECT_EQ(lg(s, r.T), 10u);
  EXPECT_EQ(r.a.value(), 3u);
  EXPECT_TRUE(owfid_verify(s, pk, c.x, s.scalar(3), r.T, r.a));
  EXPECT_FALSE(owfid_verify(s, pk, c.x, s.scalar(3), r.T, r.a + s.scalar(1)));

  const auto trivial = owfid_commit_with(s, pk, {s.g1_identity(), s.scalar(0)});
  EXPECT_EQ(trivial.x, s.g2_identity());
  for (std::uint64_t m = 1; m < 11; ++m) {
    const auto rr = owfid_respond(s, sk, c.witness, s.scalar(m));
    EXPECT_TRUE(owfid_verify(s, pk, c.x, s.scalar(m), rr.T, rr.a)) << m;
  }
}

TEST(WorkedExamples, Scl) {
  const auto s = make_transparent_suite(11);
  const SclPublic pk{s.g1_generator(), transparent_g1(4), transparent_g2(1)};
  const SclSecret sk{s.scalar(4)};
  const auto c = scl_commit_with(s, pk, s.scalar(2));
  const auto sigma = scl_respond(s, pk, sk, c.w, s.scalar(3));
  EXPECT_EQ(lg(s, sigma), 4u);
  EXPECT_TRUE(scl_verify(s, pk, c.tau, s.scalar(3), sigma));
  EXPECT_FALSE(scl_verify(s, pk, c.tau, s.scalar(3), s.g1_mul(sigma, s.g1_generator())));
  // x r + w = 4*5 + 2 = 22 = 0 mod 11.
  EXPECT_ERRC(scl_respond(s, pk, sk, c.w, s.scalar(5)), Errc::ZeroExponent);
}

TEST(WorkedExamples, Hls) {
  const auto s = make_transparent_suite(11);
  // P = exp 2, a = 3, b = 4: R = exp 6, S = exp 8, Q = exp 24 = 2.
  const HlsPublic pk{transparent_g1(2), transparent_g1(6), transparent_g1(8), transparent_g2(4), transparent_g2(4)};
  const HlsSecret sk{transparent_g1(2)};
  ASSERT_TRUE(key_consistent(s, {SchemeId::HLS, pk, sk}));
  EXPECT_TRUE(algebra::ddh_solve(s, pk.P, pk.R, pk.S, sk.Q));
  const auto c = hls_commit_with(s, pk, s.scalar(5));
  EXPECT_EQ(lg(s, c.w), 9u);
  const auto sigma = hls_respond(s, pk, sk, c.r, s.scalar(2));
  EXPECT_EQ(lg(s, sigma), 3u);
  EXPECT_TRUE(hls_verify(s, pk, c.w, s.scalar(2), sigma));
  EXPECT_FALSE(hls_verify(s, pk, c.w, s.scalar(2), hls_respond(s, pk, {transparent_g1(5)}, c.r, s.scalar(2))));
}

TEST(Keygen, KeyEquationsHold) {
  for (const auto& suite : testing::small_suites()) {
    Rng rng(11, suite.p());
    for (auto scheme : kAllSchemes) {
      for (int i = 0; i < 20; ++i) {
        const auto kp = keygen(scheme, suite, rng);
        EXPECT_EQ(scheme_of(kp.pk), scheme);
        EXPECT_TRUE(key_consistent(suite, kp)) << scheme_name(scheme) << " p=" << suite.p();
      }
    }
  }
}

TEST(Keygen, HlsSecretIsDiffieHellmanOfPublicKey) {
  const auto s = make_transparent_suite(1009);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto kp = keygen(SchemeId::HLS, s, rng);
    const auto& pk = std::get<HlsPublic>(kp.pk);
    const auto& sk = std::get<HlsSecret>(kp.sk);
    EXPECT_TRUE(algebra::ddh_solve(s, pk.P, pk.R, pk.S, sk.Q));
    EXPECT_EQ(s.pairing(pk.P, sk.Q), pk.v);
  }
}

TEST(Keygen, BlsidDefaults) {
  Rng rng(1);
  const auto flat = keygen(SchemeId::BLSID, make_transparent_suite(1009), rng);
  EXPECT_EQ(std::get<BlsidPublic>(flat.pk).n, 10u);
  EXPECT_EQ(std::get<BlsidPublic>(flat.pk).hash_mode, sig::HashMode::Seeded);
  const auto curve = keygen(SchemeId::BLSID, curve::make_suite(BackendKind::TateCurve, 131), rng, {.n = 12});
  EXPECT_EQ(std::get<BlsidPublic>(curve.pk).n, 12u);
  EXPECT_EQ(std::get<BlsidPublic>(curve.pk).hash_mode, sig::HashMode::TryAndIncrement);
}

class Viability : public ::testing::TestWithParam<SchemeId> {};

TEST_P(Viability, HonestSessionsAccept) {
  for (const auto& suite : testing::small_suites()) {
    Rng rng(5, suite.p());
    const auto kp = keygen(GetParam(), suite, rng);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto t = run_session(kp, suite, seed);
      ASSERT_TRUE(t.accepted) << scheme_name(GetParam()) << " p=" << suite.p() << " seed=" << seed << " "
                              << t.abort_reason;
      ASSERT_TRUE(replay(t, suite, kp.pk));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllSchemes, Viability, ::testing::ValuesIn(kAllSchemes),
                         [](const auto& info) { return scheme_name(info.param); });

struct CostRow {
  algebra::Bandwidth bw;  // only the element counts are compared
  algebra::OpCounts prover;
  algebra::OpCounts verifier;
};

CostRow expected_row(SchemeId s) {
  auto bw = [](std::uint64_t g1, std::uint64_t g2, std::uint64_t zp, std::uint64_t bits) {
    algebra::Bandwidth b;
    b.g1 = g1, b.g2 = g2, b.zp = zp, b.bits = bits;
    return b;
  };
  switch (s) {
    case SchemeId::BLSID: return {bw(1, 0, 0, 1), {1, 0, 0}, {0, 0, 2}};
    case SchemeId::CDHID: return {bw(2, 0, 0, 0), {1, 0, 0}, {0, 0, 2}};
    case SchemeId::SDHID: return {bw(1, 0, 2, 0), {1, 0, 0}, {2, 0, 1}};
    case SchemeId::OWFID: return {bw(1, 1, 2, 0), {1, 1, 1}, {0, 2, 1}};
    case SchemeId::SCL: return {bw(2, 0, 1, 0), {2, 0, 0}, {1, 0, 1}};
    case SchemeId::HLS: return {bw(1, 1, 1, 0), {2, 1, 0}, {0, 1, 1}};
  }
  return {};
}

TEST(Costs, SessionsMatchComparisonTable) {
  for (const auto& suite : testing::small_suites()) {
    Rng rng(8, suite.p());
    for (auto scheme : kAllSchemes) {
      const auto kp = keygen(scheme, suite, rng);
      const auto want = expected_row(scheme);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = run_session(kp, suite, seed);
        if (scheme == SchemeId::SCL && t.redraws > 0) continue;
        const auto& bw = t.costs.bandwidth;
        EXPECT_EQ(bw.g1, want.bw.g1) << scheme_name(scheme);
        EXPECT_EQ(bw.g2, want.bw.g2) << scheme_name(scheme);
        EXPECT_EQ(bw.zp, want.bw.zp) << scheme_name(scheme);
        EXPECT_EQ(bw.bits, want.bw.bits) << scheme_name(scheme);
        EXPECT_EQ(t.costs.prover, want.prover) << scheme_name(scheme) << " p=" << suite.p();
        EXPECT_EQ(t.costs.verifier, want.verifier) << scheme_name(scheme) << " p=" << suite.p();
      }
    }
  }
}

TEST(Costs, BandwidthBytesFollowEncodings) {
  const auto s = curve::make_suite(BackendKind::TateCurve, 131);
  Rng rng(2);
  const auto t = run_session(keygen(SchemeId::OWFID, s, rng), s, 1);
  EXPECT_EQ(t.costs.bandwidth.bytes_g1, s.g1_size());
  EXPECT_EQ(t.costs.bandwidth.bytes_g2, s.g2_size());
  EXPECT_EQ(t.costs.bandwidth.bytes_zp, 2 * s.scalar_size());
}

TEST(Properties, CdhidResponseIsUnique) {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const auto s = make_transparent_suite(p);
    for (std::uint64_t x = 1; x < p; ++x) {
      const CdhidPublic pk{transparent_g1(x)};
      for (std::uint64_t h = 1; h < p; ++h) {
        int accepted = 0;
        for (std::uint64_t sigma = 0; sigma < p; ++sigma) {
          accepted += cdhid_verify(s, pk, transparent_g1(h), transparent_g1(sigma));
        }
        ASSERT_EQ(accepted, 1) << "p=" << p << " x=" << x << " h=" << h;
      }
    }
  }
}

TEST(Properties, WrongKeySoundness) {
  const auto s = make_transparent_suite(1009);
  constexpr std::uint64_t kTrials = 1000;
  for (auto scheme : kAllSchemes) {
    Rng rng(21);
    const auto real = keygen(scheme, s, rng);
    std::uint64_t accepts = 0;
    for (std::uint64_t t = 0; t < kTrials; ++t) {
      KeyPair other = keygen(scheme, s, rng);
      while (other.sk == real.sk) other = keygen(scheme, s, rng);
      // The impostor knows the public key but holds an unrelated secret.
      const KeyPair impostor{scheme, real.pk, other.sk};
      Prover prover(s, impostor, prover_rng(t));
      Verifier verifier(s, scheme, real.pk, verifier_rng(t));
      if (has_commitment(scheme)) verifier.receive_commitment(prover.commit());
      try {
        accepts += verifier.receive_response(prover.respond(verifier.challenge()));
      } catch (const Error&) {
      }
    }
    const double rate = static_cast<double>(accepts) / kTrials;
    if (scheme == SchemeId::SDHID || scheme == SchemeId::OWFID) {
      // A wrong secret still satisfies the verification equation for a
      // 1/p fraction of challenges or nonces.
      EXPECT_TRUE(within_sigmas(rate, 1.0 / 1009, kTrials)) << scheme_name(scheme) << " rate " << rate;
    } else {
      EXPECT_EQ(accepts, 0u) << scheme_name(scheme);
    }
  }
}

TEST(StateMachine, ProverOrder) {
  const auto s = make_transparent_suite(11);
  Rng rng(1);
  const auto cd = keygen(SchemeId::CDHID, s, rng);
  Prover p1(s, cd, Rng(1));
  EXPECT_ERRC(p1.commit(), Errc::ProtocolViolation);
  const Message ch{MessageType::Challenge, {transparent_g1(3)}};
  p1.respond(ch);
  EXPECT_ERRC(p1.respond(ch), Errc::ProtocolViolation);
  EXPECT_ERRC(Prover(s, cd, Rng(1)).respond({MessageType::Challenge, {s.scalar(3)}}), Errc::ProtocolViolation);
  EXPECT_ERRC(Prover(s, cd, Rng(1)).respond({MessageType::Response, {transparent_g1(3)}}), Errc::ProtocolViolation);

  const auto ow = keygen(SchemeId::OWFID, s, rng);
  Prover p2(s, ow, Rng(1));
  EXPECT_ERRC(p2.respond({MessageType::Challenge, {s.scalar(3)}}), Errc::ProtocolViolation);
  p2.commit();
  EXPECT_ERRC(p2.commit(), Errc::ProtocolViolation);
  EXPECT_ERRC(p2.respond({MessageType::Challenge, {s.scalar(0)}}), Errc::ProtocolViolation);

  EXPECT_ERRC(Prover(s, {SchemeId::SCL, ow.pk, ow.sk}, Rng(1)), Errc::KeyMismatch);
}

TEST(StateMachine, VerifierAbortsWithReject) {
  const auto s = make_transparent_suite(11);
  Rng rng(1);
  const auto ow = keygen(SchemeId::OWFID, s, rng);
  {
    Verifier v(s, SchemeId::OWFID, ow.pk, Rng(2));
    EXPECT_ERRC(v.challenge(), Errc::ProtocolViolation);
    EXPECT_EQ(v.decision(), std::optional<bool>(false));
  }
  {
    Verifier v(s, SchemeId::OWFID, ow.pk, Rng(2));
    Prover p(s, ow, Rng(3));
    const auto c = p.commit();
    v.receive_commitment(c);
    EXPECT_ERRC(v.receive_response({MessageType::Response, {transparent_g1(1), s.scalar(1)}}),
                Errc::ProtocolViolation);
    EXPECT_EQ(v.decision(), std::optional<bool>(false));
  }
  {
    Verifier v(s, SchemeId::OWFID, ow.pk, Rng(2));
    Prover p(s, ow, Rng(3));
    v.receive_commitment(p.commit());
    const auto ch = v.challenge();
    const auto r = p.respond(ch);
    EXPECT_TRUE(v.receive_response(r));
    EXPECT_ERRC(v.receive_response(r), Errc::ProtocolViolation);
    EXPECT_EQ(v.decision(), std::optional<bool>(false));
  }
  {
    const auto cd = keygen(SchemeId::CDHID, s, rng);
    Verifier v(s, SchemeId::CDHID, cd.pk, Rng(2));
    EXPECT_ERRC(v.receive_commitment({MessageType::Commitment, {}}), Errc::ProtocolViolation);
    Verifier w(s, SchemeId::CDHID, cd.pk, Rng(2));
    EXPECT_ERRC(w.challenge_with(s.g1_identity()), Errc::ProtocolViolation);
  }
}

TEST(StateMachine, SclVerifierAvoidsDegenerateChallenge) {
  const auto s = make_transparent_suite(11);
  const KeyPair kp{SchemeId::SCL, SclPublic{s.g1_generator(), transparent_g1(4), transparent_g2(1)},
                   SclSecret{s.scalar(4)}};
  // With w = 2 the only bad challenge is r = 5. Every seed must accept.
  std::uint64_t redraws = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Prover p(s, kp, Rng(seed));
    Verifier v(s, SchemeId::SCL, kp.pk, Rng(seed, 9));
    const auto c = p.commit();
    v.receive_commitment(c);
    const auto ch = v.challenge();
    ASSERT_TRUE(v.receive_response(p.respond(ch)));
    redraws += v.redraws();
  }
  EXPECT_GT(redraws, 0u);
}

TEST(Files, KeyRecordRoundTrip) {
  for (const auto& suite : testing::small_suites()) {
    Rng rng(4, suite.p());
    for (auto scheme : kAllSchemes) {
      const auto kp = keygen(scheme, suite, rng);
      const auto full = load_key(Record::parse(key_record(suite, kp, true).str()));
      EXPECT_TRUE(full.suite.same_algebra(suite));
      EXPECT_EQ(full.scheme, scheme);
      EXPECT_EQ(full.pk, kp.pk);
      ASSERT_TRUE(full.sk.has_value());
      EXPECT_EQ(*full.sk, kp.sk);
      const auto pub = load_key(Record::parse(key_record(suite, kp, false).str()));
      EXPECT_FALSE(pub.sk.has_value());
      EXPECT_EQ(pub.pk, kp.pk);
    }
  }
}

TEST(Files, KeyRecordRejectsTampering) {
  const auto s = make_transparent_suite(11);
  Rng rng(4);
  const auto kp = keygen(SchemeId::CDHID, s, rng);
  auto rec = key_record(s, kp, true);
  rec.set("sk.x", to_hex(s.encode(kp.sk.index() == 1 ? std::get<CdhidSecret>(kp.sk).x + s.scalar(1) : s.scalar(0))));
  EXPECT_ERRC(load_key(rec), Errc::KeyMismatch);
  auto rec2 = key_record(s, kp, false);
  rec2.set("scheme", "nosuch");
  EXPECT_ANY_THROW(load_key(rec2));
}

TEST(Files, TranscriptRoundTrip) {
  for (const auto& suite : testing::small_suites()) {
    Rng rng(6, suite.p());
    for (auto scheme : kAllSchemes) {
      const auto kp = keygen(scheme, suite, rng);
      const auto t = run_session(kp, suite, 77);
      const auto back = load_transcript(Record::parse(transcript_record(suite, t).str()), suite, kp.pk);
      EXPECT_EQ(back.seed, 77u);
      EXPECT_EQ(back.commitment, t.commitment);
      EXPECT_EQ(back.challenge, t.challenge);
      EXPECT_EQ(back.response, t.response);
      EXPECT_EQ(back.accepted, t.accepted);
      EXPECT_EQ(replay(back, suite, kp.pk), back.accepted);
    }
  }
}

TEST(Sessions, DeterministicInSeed) {
  const auto s = curve::make_suite(BackendKind::TateCurve, 7);
  Rng rng(9);
  for (auto scheme : kAllSchemes) {
    const auto kp = keygen(scheme, s, rng);
    const auto a = run_session(kp, s, 5);
    const auto b = run_session(kp, s, 5);
    EXPECT_EQ(a.commitment, b.commitment);
    EXPECT_EQ(a.challenge, b.challenge);
    EXPECT_EQ(a.response, b.response);
  }
}

class CrossBackend : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CrossBackend, DecisionsAgreeUnderDlogMap) {
  const session::DlogMap map(GetParam());
  ASSERT_TRUE(map.bijective());
  Rng rng(GetParam());
  for (auto scheme : kAllSchemes) {
    const auto kp = keygen(scheme, map.flat(), rng, {.hash_mode = sig::HashMode::Seeded});
    const auto r = session::cross_backend_sweep(map, kp.pk);
    EXPECT_EQ(r.agreements, r.cases) << scheme_name(scheme);
    EXPECT_GT(r.accepts, 0u) << scheme_name(scheme);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, CrossBackend, ::testing::Values(5, 7));

}  // namespace
}  // namespace pairid::id
