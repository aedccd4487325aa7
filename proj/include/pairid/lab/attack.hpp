#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "pairid/id/session.hpp"

namespace pairid::lab {

using algebra::G1Element;
using algebra::G2Element;
using algebra::GroupSuite;
using algebra::Scalar;
using id::Message;

/// Public information available to an attacker. `hash` is BLSID's H as an
/// oracle: inside reductions it is routed through the signature game.
struct AttackContext {
  GroupSuite suite;
  id::PublicKey pk;
  std::function<G1Element(ByteView)> hash;
};

AttackContext make_context(const GroupSuite& suite, const id::PublicKey& pk);

/// The honest prover as seen by the cheating verifier B.
class ProverPort {
 public:
  virtual ~ProverPort() = default;
  /// Starts the next interaction; returns the commitment of a three-move
  /// scheme. Throws BudgetExceeded once the interaction budget is spent.
  virtual std::optional<Message> open() = 0;
  /// Answers the challenge of the interaction opened last. The prover's own
  /// refusals (IdentityChallenge, ProtocolViolation, ...) propagate.
  virtual Message respond(const Message& challenge) = 0;
  virtual std::uint64_t interactions() const = 0;
};

/// Runs real Prover sessions under one key pair.
class HonestProverPort final : public ProverPort {
 public:
  HonestProverPort(const GroupSuite& suite, id::KeyPair kp, std::uint64_t budget, Rng coins);

  std::optional<Message> open() override;
  Message respond(const Message& challenge) override;
  std::uint64_t interactions() const override { return count_; }

 private:
  GroupSuite suite_;
  id::KeyPair kp_;
  std::uint64_t budget_;
  Rng coins_;
  std::uint64_t count_ = 0;
  std::optional<id::Prover> current_;
};

/// The cheating prover A facing the honest verifier.
class CheatingProver {
 public:
  virtual ~CheatingProver() = default;
  /// Commitment for three-move schemes, nothing otherwise.
  virtual std::optional<Message> commit() = 0;
  virtual Message respond(const Message& challenge) = 0;
};

/// An active attacker (A, B). Both halves must be deterministic functions
/// of the coins they are handed and the messages they receive; rewinding
/// relies on replaying a row seed.
class AttackerPair {
 public:
  virtual ~AttackerPair() = default;
  virtual std::string name() const = 0;
  /// B: interacts with the prover and returns its state T for A.
  virtual Bytes observe(const AttackContext& ctx, ProverPort& prover, Rng& coins) = 0;
  /// A: built from the public key and B's state, continuing on the same coins.
  virtual std::unique_ptr<CheatingProver> impersonate(const AttackContext& ctx, const Bytes& state, Rng& coins) = 0;
};

/// Coin streams derived from a row seed.
inline constexpr std::uint64_t kAttackerStream = 11;
inline constexpr std::uint64_t kProverStream = 12;
inline constexpr std::uint64_t kVerifierStream = 13;

struct AttackOutcome {
  /// `seed` holds the row seed; `abort_reason` why the run ended early.
  id::Transcript transcript;
  std::uint64_t interactions = 0;
  bool budget_exceeded = false;

  bool accepted() const { return transcript.accepted; }
};

/// One attack: B against `prover`, then A against an honest verifier.
/// Attacker coins come from (row_seed, kAttackerStream). With `challenge`
/// set the verifier sends that value (one column of the summary matrix);
/// otherwise it draws from (derive_seed(row_seed, verifier_seed),
/// kVerifierStream). Any error from the attacker counts as a reject.
AttackOutcome run_attack(AttackerPair& attacker, const AttackContext& ctx, ProverPort& prover, std::uint64_t row_seed,
                         const std::optional<id::Item>& challenge = {}, std::uint64_t verifier_seed = 0);

/// Same, against an honest prover holding `kp` with budget q, seeded from
/// (row_seed, kProverStream) so the row replays exactly.
AttackOutcome run_attack(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                         std::uint64_t row_seed, const std::optional<id::Item>& challenge = {},
                         std::uint64_t verifier_seed = 0);

/// Acceptance rate over `sessions` fresh rows with honest challenges.
double estimate_success(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                        std::uint64_t sessions, std::uint64_t seed);

/// Uniform draw from the honest verifier's challenge domain.
id::Item random_challenge(const GroupSuite& suite, const id::PublicKey& pk, Rng& rng);

}  // namespace pairid::lab
