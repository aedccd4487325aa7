#pragma once

#include <cstdint>
#include <optional>

#include "pairid/lab/attack.hpp"
#include "pairid/report.hpp"

namespace pairid::lab {

/// Oracles of the one-more-CDH game for secret a. The CDH oracle answers
/// h -> h^a until the challenge oracle has been called once; a later CDH
/// query or a second challenge throws OrderViolation, and queries past the
/// budget throw BudgetExceeded.
class OmCdhOracles {
 public:
  OmCdhOracles(const GroupSuite& suite, Scalar a, std::uint64_t budget, Rng& rng);

  G1Element cdh(const G1Element& h);
  G1Element challenge();

  std::uint64_t queries() const { return queries_; }
  std::optional<G1Element> issued() const { return issued_; }

 private:
  GroupSuite suite_;
  Scalar a_;
  std::uint64_t budget_;
  Rng& rng_;
  std::uint64_t queries_ = 0;
  std::optional<G1Element> issued_;
};

class OmCdhAdversary {
 public:
  virtual ~OmCdhAdversary() = default;
  /// Given (g, g^a) and the oracles, returns a claimed r^a for the issued
  /// challenge r, or nothing to concede.
  virtual std::optional<G1Element> solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                                         OmCdhOracles& oracles, Rng& coins) = 0;
};

struct OmCdhConfig {
  std::uint64_t max_queries = 8;  // q
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
};

/// Runs the game; a trial wins iff a challenge was issued and the output is
/// r^a. Order and budget violations are recorded as losses. Counts:
/// queries, max_queries_used, order_violations, budget_violations,
/// no_challenge, conceded, wrong_answers.
GameReport om_cdh_game(OmCdhAdversary& adversary, const GroupSuite& suite, const OmCdhConfig& config);

/// Turns a CDHID attacker into a one-more-CDH solver: B's challenges are
/// answered by the CDH oracle, the verifier's challenge is the oracle's r,
/// and A's response is returned. Throws AttackFailed when A's response does
/// not satisfy e(g, t) = e(g^a, r).
G1Element cdhid_reduction(AttackerPair& attacker, const GroupSuite& suite, const G1Element& ga, OmCdhOracles& oracles,
                          Rng& coins);

/// cdhid_reduction as a game adversary; AttackFailed concedes the trial.
class CdhidReductionAdversary final : public OmCdhAdversary {
 public:
  explicit CdhidReductionAdversary(AttackerPair& attacker) : attacker_(attacker) {}
  std::optional<G1Element> solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                                 OmCdhOracles& oracles, Rng& coins) override;

 private:
  AttackerPair& attacker_;
};

}  // namespace pairid::lab
