#pragma once

#include <cstdint>
#include <set>

#include "pairid/lab/attack.hpp"
#include "pairid/sig/forgery.hpp"

namespace pairid::lab {

/// Turns a BLSID attacker into a BLS forger: B's challenges M_i become
/// signing queries, a fresh random n-bit M plays the verifier's challenge,
/// and A's response tau is output as the forgery (M, tau). Throws
/// FreshnessCollision when M equals one of the M_i and AttackFailed when
/// tau does not verify.
sig::SignedMessage blsid_forgery_reduction(AttackerPair& attacker, const GroupSuite& suite,
                                           const sig::SigPublicKey& pk, sig::SigningOracles& oracles, unsigned n,
                                           Rng& coins);

/// The reduction as a forgery-game player (BLS only). Collisions and
/// failed attacks concede the trial and are tallied here.
class BlsidReductionForger final : public sig::Forger {
 public:
  BlsidReductionForger(AttackerPair& attacker, unsigned n) : attacker_(attacker), n_(n) {}

  std::optional<sig::SignedMessage> forge(const GroupSuite& suite, sig::SigScheme scheme, const sig::SigPublicKey& pk,
                                          sig::SigningOracles& oracles, Rng& rng) override;

  std::uint64_t collisions() const { return collisions_; }
  std::uint64_t failed_attacks() const { return failed_; }

 private:
  AttackerPair& attacker_;
  unsigned n_;
  std::uint64_t collisions_ = 0;
  std::uint64_t failed_ = 0;
};

}  // namespace pairid::lab
