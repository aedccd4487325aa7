#pragma once

#include <cstdint>
#include <optional>

#include "pairid/id/session.hpp"
#include "pairid/session/transport.hpp"

namespace pairid::session {

struct SessionResult {
  /// Messages as they crossed the wire; `seed` is this side's seed.
  id::Transcript transcript;
  /// The verifier's decision; empty when the session broke off first.
  std::optional<bool> decision;
  Hello hello;
};

/// Prover side of one session. Exchanges hellos for `scheme` (mismatch:
/// ProtocolViolation), then runs the honest prover with coins
/// prover_rng(seed). A challenge the prover refuses (IdentityChallenge,
/// ZeroExponent, ...) is reported to the peer with an error frame and ends
/// the session with a reject. Wrong frame order or tags: ProtocolViolation
/// after an error frame to the peer. A key of another scheme: KeyMismatch.
SessionResult serve_prover(const algebra::GroupSuite& suite, const id::KeyPair& kp, id::SchemeId scheme,
                           Transport& transport, std::uint64_t seed);

/// Verifier side with coins verifier_rng(seed); sends the decision frame.
SessionResult run_verifier(const algebra::GroupSuite& suite, const id::PublicKey& pk, id::SchemeId scheme,
                           Transport& transport, std::uint64_t seed);

/// Throws VerifyReject unless the session ended in accept.
void require_accept(const SessionResult& result);

struct LoopbackRun {
  SessionResult prover;
  SessionResult verifier;
  Bytes prover_bytes;  // everything the prover put on the wire
  Bytes verifier_bytes;
};

/// Both sides over an in-memory transport, the prover on its own thread.
/// Errors from either side are rethrown after both have finished.
LoopbackRun run_loopback(const algebra::GroupSuite& suite, const id::KeyPair& prover_key,
                         const id::PublicKey& verifier_key, std::uint64_t seed);

/// The frames an honest session on `seed` puts on the wire, computed
/// in-process from run_session: (prover bytes, verifier bytes).
std::pair<Bytes, Bytes> expected_wire(const algebra::GroupSuite& suite, const id::KeyPair& kp, std::uint64_t seed);

}  // namespace pairid::session
