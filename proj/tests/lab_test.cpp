#include <gtest/gtest.h>

#include "pairid/algebra/transparent.hpp"
#include "pairid/lab/experiments.hpp"
#include "pairid/lab/forgery_reduction.hpp"
#include "pairid/lab/mitm.hpp"
#include "pairid/lab/scripted.hpp"
#include "pairid/stats.hpp"
#include "test_support.hpp"

namespace pairid::lab {
namespace {

using algebra::BackendKind;
using algebra::make_transparent_suite;
using algebra::transparent_g1;
using algebra::transparent_g2;
using id::MessageType;
using id::SchemeId;

id::Transcript owfid_transcript(const GroupSuite& s, std::uint64_t x, std::uint64_t m, std::uint64_t T,
                                std::uint64_t a) {
  id::Transcript t;
  t.scheme = SchemeId::OWFID;
  t.commitment = Message{MessageType::Commitment, {transparent_g2(x)}};
  t.challenge = Message{MessageType::Challenge, {s.scalar(m)}};
  t.response = Message{MessageType::Response, {transparent_g1(T), s.scalar(a)}};
  t.accepted = true;
  return t;
}

TEST(Scripted, RecoveredKeysAreConsistent) {
  const auto s = make_transparent_suite(1009);
  Rng rng(3);
  for (SchemeId scheme : id::kAllSchemes) {
    const auto kp = id::keygen(scheme, s, rng);
    const id::KeyPair rec{scheme, kp.pk, recover_secret(s, kp.pk, rng)};
    EXPECT_TRUE(id::key_consistent(s, rec)) << id::scheme_name(scheme);
  }
  const auto c = curve::make_suite(BackendKind::TateCurve, 7);
  const auto kp = id::keygen(SchemeId::CDHID, c, rng);
  EXPECT_ERRC(recover_secret(c, kp.pk, rng), Errc::InvalidArgument);
}

TEST(Scripted, AttackerSuccessMatchesParameter) {
  const auto s = make_transparent_suite(1009);
  Rng rng(4);
  for (SchemeId scheme : id::kAllSchemes) {
    const auto kp = id::keygen(scheme, s, rng);
    KnowsKeyAttacker always(1.0, 3);
    EXPECT_EQ(estimate_success(always, s, kp, 3, 100, 1), 1.0) << id::scheme_name(scheme);
    KnowsKeyAttacker never(0.0, 3);
    EXPECT_EQ(estimate_success(never, s, kp, 3, 100, 1), 0.0) << id::scheme_name(scheme);
    KnowsKeyAttacker half(0.5, 3);
    EXPECT_TRUE(within_sigmas(estimate_success(half, s, kp, 3, 1000, 1), 0.5, 1000)) << id::scheme_name(scheme);
  }
}

TEST(Attack, ReplayIsDeterministic) {
  const auto s = make_transparent_suite(101);
  Rng rng(5);
  for (SchemeId scheme : id::kAllSchemes) {
    const auto kp = id::keygen(scheme, s, rng);
    KnowsKeyAttacker attacker(0.5, 2);
    const auto a = run_attack(attacker, s, kp, 2, 77);
    const auto b = run_attack(attacker, s, kp, 2, 77);
    EXPECT_EQ(a.transcript.commitment, b.transcript.commitment);
    EXPECT_EQ(a.transcript.challenge, b.transcript.challenge);
    EXPECT_EQ(a.transcript.response, b.transcript.response);
    EXPECT_EQ(a.accepted(), b.accepted());
  }
}

TEST(Attack, InteractionBudgetIsEnforced) {
  const auto s = make_transparent_suite(101);
  Rng rng(6);
  const auto kp = id::keygen(SchemeId::CDHID, s, rng);
  KnowsKeyAttacker greedy(1.0, 5);
  const auto out = run_attack(greedy, s, kp, 4, 1);
  EXPECT_TRUE(out.budget_exceeded);
  EXPECT_FALSE(out.accepted());
  EXPECT_EQ(out.interactions, 4u);
}

TEST(OmCdh, OmniscientAlwaysWins) {
  const auto s = make_transparent_suite(1009);
  OmniscientOmCdh adv(3);
  const auto r = om_cdh_game(adv, s, {8, 100, 1});
  EXPECT_EQ(r.wins, 100u);
  EXPECT_EQ(r.counts.at("max_queries_used"), 3u);
}

TEST(OmCdh, LateQueryIsALoss) {
  const auto s = make_transparent_suite(1009);
  LateQueryOmCdh adv;
  const auto r = om_cdh_game(adv, s, {8, 50, 1});
  EXPECT_EQ(r.wins, 0u);
  EXPECT_EQ(r.counts.at("order_violations"), 50u);
}

TEST(OmCdh, OverBudgetIsALoss) {
  const auto s = make_transparent_suite(1009);
  OmniscientOmCdh adv(5);
  const auto r = om_cdh_game(adv, s, {4, 50, 1});
  EXPECT_EQ(r.wins, 0u);
  EXPECT_EQ(r.counts.at("budget_violations"), 50u);
}

TEST(OmCdh, ZeroQueriesIsPlainCdh) {
  const auto s = make_transparent_suite(1009);
  GuessingOmCdh adv(0);
  const auto r = om_cdh_game(adv, s, {0, 5000, 2});
  EXPECT_TRUE(within_sigmas(r.advantage(), 1.0 / 1009, r.trials)) << r.advantage();
}

TEST(CdhidReduction, FaithfulForAlwaysSucceedingAttacker) {
  const auto s = make_transparent_suite(1009);
  KnowsKeyAttacker attacker(1.0, 4);
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng game(t, 0);
    Rng coins(t, 1);
    const Scalar a = s.random_nonzero_scalar(game);
    const G1Element ga = s.g1_exp(s.g1_generator(), a);
    OmCdhOracles oracles(s, a, 4, game);
    const G1Element out = cdhid_reduction(attacker, s, ga, oracles, coins);
    EXPECT_EQ(s.pairing(s.g1_generator(), out), s.pairing(ga, *oracles.issued()));
    EXPECT_LE(oracles.queries(), 4u);
  }
}

TEST(CdhidReduction, TracksAttackerSuccess) {
  const auto s = make_transparent_suite(1009);
  const auto r = omcdh_experiment(s, 0.3, 4, 1000, 9);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
  EXPECT_LE(r.counts.at("max_queries_used"), 4u);
}

TEST(CdhidReduction, OverBudgetAttackerIsStopped) {
  const auto s = make_transparent_suite(1009);
  KnowsKeyAttacker attacker(1.0, 5);
  Rng game(1, 0);
  Rng coins(1, 1);
  OmCdhOracles oracles(s, s.scalar(7), 4, game);
  EXPECT_ERRC(cdhid_reduction(attacker, s, transparent_g1(7), oracles, coins), Errc::BudgetExceeded);
}

TEST(ForgeryReduction, OmniscientAttackerForgesValidPairs) {
  const auto s = make_transparent_suite(1009);
  const auto r = forgery_experiment(s, 20, 4, 1.0, 100, 3);
  EXPECT_EQ(r.counts.at("failed_attacks"), 0u);
  EXPECT_EQ(r.wins + r.counts.at("collisions"), 100u);
}

TEST(ForgeryReduction, CollisionTermAtSmallN) {
  const auto s = make_transparent_suite(1009);
  const auto r = forgery_experiment(s, 4, 8, 1.0, 1000, 4);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
}

TEST(ForgeryReduction, RateFollowsAttacker) {
  const auto s = make_transparent_suite(1009);
  const auto r = forgery_experiment(s, 30, 4, 0.5, 1000, 5);
  EXPECT_TRUE(within_sigmas(r.advantage(), 0.5, r.trials)) << r.advantage();
}

TEST(Inversion, CdhWorkedExample) {
  const auto s = make_transparent_suite(11);
  const G1Element out = invert_to_cdh(perfect_inverter(s), s, s.g1_generator(), transparent_g1(3), transparent_g1(4));
  EXPECT_EQ(out, transparent_g1(1));
}

TEST(Inversion, DdhAcceptsDiffieHellmanTuple) {
  const auto s = make_transparent_suite(101);
  Rng rng(1);
  const G2Element y = transparent_g2(17);
  EXPECT_TRUE(invert_to_ddh(perfect_inverter(s), s, y, s.g2_exp(y, s.scalar(5)), s.g2_exp(y, s.scalar(9)),
                            s.g2_exp(y, s.scalar(45)), rng));
  EXPECT_FALSE(invert_to_ddh(perfect_inverter(s), s, y, s.g2_exp(y, s.scalar(5)), s.g2_exp(y, s.scalar(9)),
                             s.g2_exp(y, s.scalar(46)), rng));
}

TEST(Inversion, DdhExhaustiveAndNoisy) {
  const auto r = invert_ddh_experiment(make_transparent_suite(11), 0.8, 1000, 6);
  EXPECT_EQ(r.counts.at("exhaustive_cases"), 1331u);
  EXPECT_EQ(r.counts.at("exhaustive_mismatches"), 0u);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
}

TEST(Inversion, CdhRateFollowsInverter) {
  const auto r = invert_cdh_experiment(make_transparent_suite(1009), 0.6, 1000, 7);
  EXPECT_TRUE(within_sigmas(r.advantage(), 0.6, r.trials)) << r.advantage();
  EXPECT_TRUE(r.pass.value());
}

TEST(HeavyRow, SimpleMatrices) {
  SummaryMatrix full(3, 5);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 5; ++c) full.set(r, c, true);
  EXPECT_EQ(heavy_row_stats(full).heavy_mass, 1.0);

  SummaryMatrix one(4, 4);
  one.set(2, 1, true);
  const auto st = heavy_row_stats(one);
  EXPECT_EQ(st.heavy_rows, 1u);
  EXPECT_EQ(st.heavy_mass, 1.0);
  EXPECT_DOUBLE_EQ(st.epsilon, 1.0 / 16);
}

TEST(HeavyRow, MatchesDirectComputation) {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const std::size_t rows = 1 + rng.below(8);
    const std::size_t cols = 1 + rng.below(8);
    SummaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.bernoulli(rng.unit()));
    if (m.ones() == 0) continue;
    const double eps = static_cast<double>(m.ones()) / static_cast<double>(rows * cols);
    double heavy = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double frac = static_cast<double>(m.row_ones(r)) / static_cast<double>(cols);
      if (frac >= eps / 2 - 1e-12) heavy += static_cast<double>(m.row_ones(r));
    }
    EXPECT_NEAR(heavy_row_stats(m).heavy_mass, heavy / static_cast<double>(m.ones()), 1e-12);
  }
}

TEST(HeavyRow, ExhaustiveFourByFour) {
  const auto sweep = heavy_row_exhaustive(4, 4);
  EXPECT_GT(sweep.matrices, 0u);
  EXPECT_EQ(sweep.violations, 0u);
  EXPECT_GE(sweep.min_heavy_mass, 0.5);
}

TEST(Rewinding, SummaryMatrixMatchesReplay) {
  const auto s = make_transparent_suite(101);
  Rng rng(9);
  const auto kp = id::keygen(SchemeId::OWFID, s, rng);
  KnowsKeyAttacker attacker(0.5, 2);
  std::vector<std::uint64_t> seeds;
  std::vector<id::Item> challenges;
  for (int i = 0; i < 6; ++i) seeds.push_back(rng.next());
  for (int i = 0; i < 8; ++i) challenges.push_back(s.random_nonzero_scalar(rng));
  const auto m = build_summary(attacker, s, kp, 2, seeds, challenges);
  for (std::size_t r = 0; r < seeds.size(); ++r) {
    for (std::size_t c = 0; c < challenges.size(); ++c) {
      KnowsKeyAttacker fresh(0.5, 2);
      EXPECT_EQ(m.at(r, c), run_attack(fresh, s, kp, 2, seeds[r], challenges[c]).accepted());
    }
  }
}

TEST(Rewinding, ProbePostconditions) {
  const auto s = make_transparent_suite(101);
  Rng rng(10);
  const auto kp = id::keygen(SchemeId::OWFID, s, rng);
  KnowsKeyAttacker attacker(1.0, 2);
  for (int i = 0; i < 50; ++i) {
    const auto res = probe_strategy(attacker, s, kp, 2, iterated_budget(1.0), rng);
    EXPECT_EQ(res.first.transcript.commitment, res.second.transcript.commitment);
    EXPECT_NE(res.first.transcript.challenge, res.second.transcript.challenge);
    EXPECT_EQ(res.probes, 2u);
  }
  KnowsKeyAttacker hopeless(0.0, 2);
  EXPECT_ERRC(probe_strategy(hopeless, s, kp, 2, {3, 3}, rng), Errc::ProbeFailed);
}

TEST(Rewinding, ProbeMeetsBound) {
  const auto r = probe_experiment(make_transparent_suite(101), 0.5, 300, 11);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
}

TEST(Rewinding, BudgetsRoundUp) {
  EXPECT_EQ(iterated_budget(0.5).step1, 2u);
  EXPECT_EQ(iterated_budget(0.5).step2, 4u);
  EXPECT_EQ(iterated_budget(0.3).step1, 4u);
  EXPECT_EQ(iterated_budget(0.3).step2, 7u);
}

class ExtractorExample : public ::testing::Test {
 protected:
  GroupSuite s = make_transparent_suite(11);
  id::OwfidPublic pk{transparent_g1(2), transparent_g2(5), transparent_g2(7)};
  id::OwfidSecret own{transparent_g1(3), s.scalar(4)};
};

TEST_F(ExtractorExample, OwnKeyGivesSameWitness) {
  const auto t1 = owfid_transcript(s, 1, 3, 10, 3);
  const auto t2 = owfid_transcript(s, 1, 5, 5, 0);
  EXPECT_ERRC(owfid_extractor(s, t1, t2, own, pk), Errc::SameWitness);
}

TEST_F(ExtractorExample, SecondKeyInvertsPairing) {
  // Enumerate the valid keys and pick one other than (Q*, s*).
  const auto keys = owfid_valid_keys(s, pk);
  ASSERT_EQ(keys.size(), 11u);
  for (const auto& key : keys) {
    if (key == own) continue;
    Rng rng(key.s.value());
    const auto c = id::owfid_commit(s, pk, rng);
    const id::Scalar m1 = s.scalar(3);
    const id::Scalar m2 = s.scalar(5);
    const auto r1 = id::owfid_respond(s, key, c.witness, m1);
    const auto r2 = id::owfid_respond(s, key, c.witness, m2);
    auto t1 = owfid_transcript(s, 0, 3, 0, 0);
    auto t2 = owfid_transcript(s, 0, 5, 0, 0);
    t1.commitment->items[0] = t2.commitment->items[0] = c.x;
    t1.response->items = {r1.T, r1.a};
    t2.response->items = {r2.T, r2.a};
    const G1Element Z = owfid_extractor(s, t1, t2, own, pk);
    EXPECT_EQ(s.pairing(pk.P, Z), pk.y);
  }
}

TEST_F(ExtractorExample, RejectsMalformedPairs) {
  const auto t1 = owfid_transcript(s, 1, 3, 10, 3);
  EXPECT_ERRC(owfid_extractor(s, t1, t1, own, pk), Errc::MalformedTranscripts);
  auto bad = owfid_transcript(s, 1, 5, 6, 0);
  EXPECT_ERRC(owfid_extractor(s, t1, bad, own, pk), Errc::MalformedTranscripts);
}

TEST(Inverter, IteratedMeetsBound) {
  const auto r = extractor_experiment(make_transparent_suite(101), 0.5, InverterMode::Iterated, 300, 12);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
}

TEST(Inverter, SingleShotMeetsBound) {
  const auto r = extractor_experiment(make_transparent_suite(101), 0.5, InverterMode::SingleShot, 300, 13);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
}

TEST(Inverter, PerfectAttackerAlmostAlwaysInverts) {
  const auto r = extractor_experiment(make_transparent_suite(101), 1.0, InverterMode::Iterated, 300, 14);
  EXPECT_TRUE(meets_lower_bound(r.advantage(), 100.0 / 101, r.trials)) << r.advantage();
}

TEST(Inverter, Preconditions) {
  Rng rng(15);
  KnowsKeyAttacker attacker(0.5, 2);
  const auto small = make_transparent_suite(11);
  EXPECT_ERRC(owfid_inverter(attacker, small, transparent_g1(2), transparent_g2(5), {InverterMode::Iterated, 2, 0.5},
                             rng),
              Errc::InvalidArgument);
  const auto s = make_transparent_suite(101);
  EXPECT_ERRC(owfid_inverter(attacker, s, transparent_g1(2), transparent_g2(5), {InverterMode::Iterated, 2, 0.01},
                             rng),
              Errc::InvalidArgument);
  EXPECT_EQ(parse_inverter_mode("single-shot"), InverterMode::SingleShot);
  EXPECT_ERRC(parse_inverter_mode("twice"), Errc::InvalidArgument);
}

TEST(Mitm, RelayIsTransparent) {
  const auto s = make_transparent_suite(1009);
  Rng rng(16);
  const auto kp = id::keygen(SchemeId::CDHID, s, rng);
  const auto clean = mitm_relay_demo(s, kp, 5);
  EXPECT_TRUE(clean.relayed.accepted);
  EXPECT_TRUE(clean.identical);
  EXPECT_FALSE(clean.note.empty());
  const auto dirty = mitm_relay_demo(s, kp, 5, 3);
  EXPECT_FALSE(dirty.relayed.accepted);
}

TEST(Mitm, AllSchemesBothBackends) {
  EXPECT_TRUE(mitm_experiment(make_transparent_suite(1009), 20, 1).pass.value());
  EXPECT_TRUE(mitm_experiment(curve::make_suite(BackendKind::TateCurve, 7), 5, 2).pass.value());
}

TEST(SoundnessFloor, KeylessProversAtRandomLevel) {
  for (const auto& r : soundness_floor_experiment(make_transparent_suite(1009), 2000, 17)) {
    EXPECT_TRUE(r.pass.value()) << r.to_record();
  }
}

TEST(WitnessIndistinguishability, ExhaustiveAtThirteen) {
  const auto r = wi_experiment(make_transparent_suite(13), 1, 18);
  EXPECT_EQ(r.trials, 12u * 13 * 13);
  EXPECT_TRUE(r.pass.value()) << r.to_record();
}

}  // namespace
}  // namespace pairid::lab
