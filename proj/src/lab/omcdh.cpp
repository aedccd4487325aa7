#include "pairid/lab/omcdh.hpp"

#include <algorithm>
#include <chrono>

namespace pairid::lab {

OmCdhOracles::OmCdhOracles(const GroupSuite& suite, Scalar a, std::uint64_t budget, Rng& rng)
    : suite_(suite.uncounted()), a_(a), budget_(budget), rng_(rng) {}

G1Element OmCdhOracles::cdh(const G1Element& h) {
  if (issued_) fail(Errc::OrderViolation, "CDH oracle called after the challenge oracle");
  if (queries_ >= budget_) fail(Errc::BudgetExceeded, "CDH oracle budget of " + std::to_string(budget_) + " spent");
  ++queries_;
  return suite_.g1_exp(h, a_);
}

G1Element OmCdhOracles::challenge() {
  if (issued_) fail(Errc::OrderViolation, "challenge oracle called twice");
  issued_ = suite_.random_g1(rng_);
  return *issued_;
}

GameReport om_cdh_game(OmCdhAdversary& adversary, const GroupSuite& suite, const OmCdhConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const GroupSuite plain = suite.uncounted();
  GameReport report;
  report.game = "omcdh";
  report.add_param("p", std::to_string(suite.p()));
  report.add_param("backend", algebra::backend_name(suite.kind()));
  report.add_param("q", std::to_string(config.max_queries));
  report.counts = {{"queries", 0},          {"max_queries_used", 0}, {"order_violations", 0},
                   {"budget_violations", 0}, {"no_challenge", 0},     {"conceded", 0},
                   {"wrong_answers", 0}};

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    Rng game_rng(config.seed, 2 * t);
    Rng coins(config.seed, 2 * t + 1);
    const Scalar a = plain.random_nonzero_scalar(game_rng);
    const G1Element g = plain.g1_generator();
    const G1Element ga = plain.g1_exp(g, a);
    OmCdhOracles oracles(plain, a, config.max_queries, game_rng);

    std::optional<G1Element> out;
    std::optional<Errc> violation;
    try {
      out = adversary.solve(plain, g, ga, oracles, coins);
    } catch (const Error& e) {
      violation = e.code();
    }
    report.counts["queries"] += oracles.queries();
    report.counts["max_queries_used"] = std::max(report.counts["max_queries_used"], oracles.queries());
    ++report.trials;
    if (violation == Errc::OrderViolation) {
      ++report.counts["order_violations"];
    } else if (violation == Errc::BudgetExceeded) {
      ++report.counts["budget_violations"];
    } else if (violation || !out) {
      ++report.counts["conceded"];
    } else if (!oracles.issued()) {
      ++report.counts["no_challenge"];
    } else if (*out != plain.g1_exp(*oracles.issued(), a)) {
      ++report.counts["wrong_answers"];
    } else {
      ++report.wins;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

/// B's prover interactions answered by the CDH oracle, as the honest
/// prover would: h -> h^a, refusing the identity.
class CdhOraclePort final : public ProverPort {
 public:
  CdhOraclePort(const GroupSuite& suite, OmCdhOracles& oracles) : suite_(suite), oracles_(oracles) {}

  std::optional<Message> open() override {
    ++opened_;
    return std::nullopt;
  }

  Message respond(const Message& challenge) override {
    id::check_layout(id::SchemeId::CDHID, challenge);
    if (challenge.type != id::MessageType::Challenge) fail(Errc::ProtocolViolation, "expected a challenge");
    const auto& h = std::get<G1Element>(challenge.items[0]);
    if (h == suite_.g1_identity()) fail(Errc::IdentityChallenge, "CDHID challenge is the identity");
    return {id::MessageType::Response, {oracles_.cdh(h)}};
  }

  std::uint64_t interactions() const override { return opened_; }

 private:
  GroupSuite suite_;
  OmCdhOracles& oracles_;
  std::uint64_t opened_ = 0;
};

}  // namespace

G1Element cdhid_reduction(AttackerPair& attacker, const GroupSuite& suite, const G1Element& ga, OmCdhOracles& oracles,
                          Rng& coins) {
  const GroupSuite plain = suite.uncounted();
  const AttackContext ctx = make_context(plain, id::CdhidPublic{ga});
  CdhOraclePort port(plain, oracles);

  const Bytes state = attacker.observe(ctx, port, coins);
  auto cheat = attacker.impersonate(ctx, state, coins);
  const G1Element r = oracles.challenge();
  // The honest verifier never sends the identity, and 1^a needs no attacker.
  if (r == plain.g1_identity()) return r;
  const Message resp = cheat->respond({id::MessageType::Challenge, {r}});
  id::check_layout(id::SchemeId::CDHID, resp);
  const auto& t = std::get<G1Element>(resp.items[0]);
  if (!id::cdhid_verify(plain, id::CdhidPublic{ga}, r, t)) fail(Errc::AttackFailed, "cheating prover was rejected");
  return t;
}

std::optional<G1Element> CdhidReductionAdversary::solve(const GroupSuite& suite, const G1Element&, const G1Element& ga,
                                                        OmCdhOracles& oracles, Rng& coins) {
  try {
    return cdhid_reduction(attacker_, suite, ga, oracles, coins);
  } catch (const Error& e) {
    if (e.code() == Errc::AttackFailed) return std::nullopt;
    throw;
  }
}

}  // namespace pairid::lab
