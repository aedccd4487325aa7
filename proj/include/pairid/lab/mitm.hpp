#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pairid/id/session.hpp"

namespace pairid::lab {

struct MitmReport {
  id::Transcript relayed;
  id::Transcript honest;
  /// Every relayed payload equals the honest session's, and so does the
  /// decision.
  bool identical = false;
  std::string note;
};

/// A relay sitting between an honest prover and an honest verifier on one
/// seed. It forwards the encoded payloads untouched, or flips one bit of the
/// response payload when `flip_bit` is set. The honest session on the same
/// seed is run for comparison.
MitmReport mitm_relay_demo(const algebra::GroupSuite& suite, const id::KeyPair& kp, std::uint64_t seed,
                           std::optional<std::size_t> flip_bit = {});

}  // namespace pairid::lab
