#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pairid/algebra/group.hpp"
#include "pairid/bytes.hpp"

namespace pairid::sig {

using algebra::G1Element;
using algebra::GroupSuite;

enum class HashMode {
  /// H(M) = g^(int(M) mod p). Insecure: the exponent is public, so H(M)^x is
  /// computable from v. Transparent backend only, for worked examples.
  TestVector,
  /// H(M) = g^h(key, M) with h from SHA-256, landing in [1, p). Either backend.
  Seeded,
  /// Hash counter || M to an x-coordinate, lift, clear the cofactor.
  /// Curve backend only.
  TryAndIncrement,
};

std::string hash_mode_name(HashMode mode);
HashMode parse_hash_mode(const std::string& name);
/// Seeded on the transparent backend, try-and-increment on the curve.
HashMode default_hash_mode(algebra::BackendKind kind);

std::array<std::uint8_t, 32> sha256(ByteView data);

/// A member of a keyed family of full-domain hashes {0,1}* -> G1. Hashing is
/// never charged to the cost counters.
class GroupHash {
 public:
  explicit GroupHash(HashMode mode, std::uint64_t key = 0) : mode_(mode), key_(key) {}

  HashMode mode() const { return mode_; }
  std::uint64_t key() const { return key_; }

  /// Throws ModeBackendMismatch, or HashFailed if try-and-increment exhausts
  /// its 256 counters.
  G1Element operator()(const GroupSuite& suite, ByteView message) const;

 private:
  HashMode mode_;
  std::uint64_t key_;
};

inline G1Element hash_to_group(ByteView message, HashMode mode, const GroupSuite& suite, std::uint64_t key = 0) {
  return GroupHash(mode, key)(suite, message);
}

}  // namespace pairid::sig
