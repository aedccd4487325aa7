#pragma once

// Scripted adversaries for positive controls. Those that need secrets read
// discrete logs and therefore run on the transparent backend only
// (InvalidArgument otherwise).

#include <cstdint>
#include <memory>

#include "pairid/lab/attack.hpp"
#include "pairid/lab/omcdh.hpp"
#include "pairid/lab/pairing_inversion.hpp"

namespace pairid::lab {

/// Recovers a working private key from the public key by discrete logs.
/// For OWFID, one of the p valid keys is chosen with `rng`.
id::SecretKey recover_secret(const GroupSuite& suite, const id::PublicKey& pk, Rng& rng);

/// Attacker that knows a working key. B makes `queries` honest-looking
/// interactions (distinct challenges for BLSID). A answers correctly on a
/// pseudorandom `success` fraction of challenges, keyed by its coins, and
/// otherwise sends a response that is certain to be rejected. Success 1
/// gives an always-accepting attacker.
class KnowsKeyAttacker final : public AttackerPair {
 public:
  KnowsKeyAttacker(double success, std::uint64_t queries);

  std::string name() const override { return "knows-key"; }
  Bytes observe(const AttackContext& ctx, ProverPort& prover, Rng& coins) override;
  std::unique_ptr<CheatingProver> impersonate(const AttackContext& ctx, const Bytes& state, Rng& coins) override;

 private:
  double success_;
  std::uint64_t queries_;
};

/// Attacker without any key: commitment and response items are uniform
/// over their domains, or, with `identity_response`, every G1 response
/// item is the identity. Works on either backend.
class RandomResponder final : public AttackerPair {
 public:
  explicit RandomResponder(bool identity_response = false) : identity_(identity_response) {}

  std::string name() const override { return identity_ ? "identity-responder" : "random-responder"; }
  Bytes observe(const AttackContext& ctx, ProverPort& prover, Rng& coins) override;
  std::unique_ptr<CheatingProver> impersonate(const AttackContext& ctx, const Bytes& state, Rng& coins) override;

 private:
  bool identity_;
};

/// Reads a and answers the challenge exactly.
class OmniscientOmCdh final : public OmCdhAdversary {
 public:
  explicit OmniscientOmCdh(std::uint64_t queries = 0) : queries_(queries) {}
  std::optional<G1Element> solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                                 OmCdhOracles& oracles, Rng& coins) override;

 private:
  std::uint64_t queries_;
};

/// Spends its queries, then guesses a uniform element.
class GuessingOmCdh final : public OmCdhAdversary {
 public:
  explicit GuessingOmCdh(std::uint64_t queries = 0) : queries_(queries) {}
  std::optional<G1Element> solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                                 OmCdhOracles& oracles, Rng& coins) override;

 private:
  std::uint64_t queries_;
};

/// Takes the challenge first, then asks the CDH oracle for r^a.
class LateQueryOmCdh final : public OmCdhAdversary {
 public:
  std::optional<G1Element> solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                                 OmCdhOracles& oracles, Rng& coins) override;
};

/// Exact inverter on the transparent backend: h = g^(log x / log g).
Inverter perfect_inverter(const GroupSuite& suite);
/// Correct with probability eps, otherwise a uniform element of G1.
Inverter noisy_inverter(const GroupSuite& suite, double eps, std::uint64_t seed);

}  // namespace pairid::lab
