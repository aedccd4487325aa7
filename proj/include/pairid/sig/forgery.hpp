#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pairid/report.hpp"
#include "pairid/sig/signatures.hpp"

namespace pairid::sig {

enum class SigScheme { Bls, Bb };

std::string sig_scheme_name(SigScheme scheme);
SigScheme parse_sig_scheme(const std::string& name);

/// Public key as seen by a forger. BLS fills only `v`.
struct SigPublicKey {
  G1Element u;
  G1Element v;
  G2Element z;
};

/// A message with its claimed signature. BB messages are encoded scalars
/// (suite.encode(m)); `r` is unused for BLS.
struct SignedMessage {
  Bytes message;
  G1Element sigma;
  Scalar r;
};

/// Oracles handed to a forger during the query phase. Each call beyond the
/// configured budget throws BudgetExceeded, which the game scores as a loss.
class SigningOracles {
 public:
  virtual ~SigningOracles() = default;
  virtual SignedMessage sign(ByteView message) = 0;
  virtual G1Element hash(ByteView message) = 0;
};

class Forger {
 public:
  virtual ~Forger() = default;
  /// Returns a claimed forgery, or nothing to concede the trial.
  virtual std::optional<SignedMessage> forge(const GroupSuite& suite, SigScheme scheme, const SigPublicKey& pk,
                                             SigningOracles& oracles, Rng& rng) = 0;
};

struct ForgeryGameConfig {
  std::uint64_t max_sign_queries = 8;  // q_S
  std::uint64_t max_hash_queries = 64;  // q_H
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  /// Hash family for BLS; each trial draws a fresh key from the family.
  std::optional<HashMode> hash_mode{};
};

/// Runs Setup / Queries / Output once per trial. A trial is won iff the
/// output verifies, its message was never submitted to the signing oracle,
/// and both budgets were respected.
GameReport forgery_game(SigScheme scheme, Forger& forger, const GroupSuite& suite, const ForgeryGameConfig& config);

/// Verifies a signed message under `pk` (BB messages must decode to Z_p*).
bool verify_signed_message(SigScheme scheme, const GroupSuite& suite, const GroupHash& hash, const SigPublicKey& pk,
                           const SignedMessage& sm);

}  // namespace pairid::sig
