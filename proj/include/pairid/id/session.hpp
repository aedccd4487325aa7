#pragma once

#include <optional>
#include <string>

#include "pairid/id/message.hpp"
#include "pairid/id/protocols.hpp"

namespace pairid::id {

/// Honest prover for one session. Calls must follow the scheme's order:
/// commit() (three-move schemes only), then respond(); anything else throws
/// ProtocolViolation.
class Prover {
 public:
  Prover(const GroupSuite& suite, KeyPair kp, Rng rng);

  SchemeId scheme() const { return kp_.scheme; }
  Message commit();
  /// Also throws IdentityChallenge, BadChallengeLength or ZeroExponent when
  /// the challenge admits no honest response.
  Message respond(const Message& challenge);
  bool done() const { return state_ == State::Done; }
  /// Zero-denominator redraws made while responding (SDHID).
  unsigned redraws() const { return redraws_; }

 private:
  enum class State { Fresh, Committed, Done };

  GroupSuite suite_;
  KeyPair kp_;
  Rng rng_;
  State state_ = State::Fresh;
  OwfidWitness owfid_{};
  Scalar nonce_{0, 2};  // SCL w or HLS r
  unsigned redraws_ = 0;
};

/// Honest verifier for one session. A protocol violation aborts the session
/// with a reject decision before the error propagates.
class Verifier {
 public:
  Verifier(const GroupSuite& suite, SchemeId scheme, PublicKey pk, Rng rng);

  SchemeId scheme() const { return scheme_; }
  void receive_commitment(const Message& commitment);
  /// Draws the challenge from the scheme's domain.
  Message challenge();
  /// Uses the given challenge value instead of drawing one (harness use).
  /// Throws ProtocolViolation if it lies outside the challenge domain.
  Message challenge_with(const Item& value);
  bool receive_response(const Message& response);

  std::optional<bool> decision() const { return decision_; }
  /// Challenge redraws (SCL, when tau v^r would be the identity).
  unsigned redraws() const { return redraws_; }

 private:
  enum class State { Fresh, Committed, Challenged, Done };

  [[noreturn]] void violate(const std::string& what);
  void require(State expected, const char* what);

  GroupSuite suite_;
  SchemeId scheme_;
  PublicKey pk_;
  Rng rng_;
  State state_ = State::Fresh;
  std::optional<Message> commitment_;
  std::optional<Message> challenge_;
  std::optional<G1Element> scl_vr_;
  std::optional<bool> decision_;
  unsigned redraws_ = 0;
};

/// Verifier's decision from recorded messages alone (no state, no redraws).
bool check_messages(const GroupSuite& suite, const PublicKey& pk, const std::optional<Message>& commitment,
                    const Message& challenge, const Message& response);

struct Transcript {
  SchemeId scheme = SchemeId::CDHID;
  /// Prover coins come from stream (seed, 1), verifier coins from (seed, 2).
  std::uint64_t seed = 0;
  std::optional<Message> commitment;
  Message challenge{MessageType::Challenge, {}};
  std::optional<Message> response;
  bool accepted = false;
  /// Set when the prover aborted instead of responding.
  std::string abort_reason;
  algebra::CostCounter costs;
  unsigned redraws = 0;
};

Rng prover_rng(std::uint64_t seed);
Rng verifier_rng(std::uint64_t seed);

/// One honest session with instrumented costs.
Transcript run_session(const KeyPair& kp, const GroupSuite& suite, std::uint64_t seed);

/// Re-runs the verifier's check on the recorded messages.
bool replay(const Transcript& t, const GroupSuite& suite, const PublicKey& pk);

/// Text record, one message per line as hex payload.
Record transcript_record(const GroupSuite& suite, const Transcript& t);
/// `pk` supplies BLSID's n for decoding.
Transcript load_transcript(const Record& record, const GroupSuite& suite, const PublicKey& pk);

unsigned challenge_bits(const PublicKey& pk);

}  // namespace pairid::id
