#pragma once

// Discrete-log identification between the transparent backend and the curve
// backend of the same prime order: exponent k <-> k*G in G1 and
// e(G,G)^k in G2.

#include <cstdint>
#include <optional>
#include <vector>

#include "pairid/id/session.hpp"

namespace pairid::session {

class DlogMap {
 public:
  /// Needs a shipped curve of order p.
  explicit DlogMap(std::uint64_t p);

  const algebra::GroupSuite& flat() const { return flat_; }
  const algebra::GroupSuite& curve() const { return curve_; }
  std::uint64_t p() const { return flat_.p(); }

  /// The images of 0..p-1 must be distinct for the map to be an isomorphism.
  bool bijective() const;

  algebra::G1Element g1(std::uint64_t k) const { return g1_.at(k % p()); }
  algebra::G2Element g2(std::uint64_t k) const { return g2_.at(k % p()); }

  id::Item item(const id::Item& it) const;
  id::Message message(const id::Message& m) const;
  id::PublicKey public_key(const id::PublicKey& pk) const;

 private:
  algebra::GroupSuite flat_;
  algebra::GroupSuite curve_;
  std::vector<algebra::G1Element> g1_;
  std::vector<algebra::G2Element> g2_;
};

/// Every value of one item kind on the transparent backend (bit strings of
/// length `bits`; scalars optionally without zero).
std::vector<id::Item> all_items(const algebra::GroupSuite& flat, id::ItemKind kind, unsigned bits,
                                bool nonzero_scalars);

/// Every message of the given layout. Challenges range over the honest
/// domain: Z_p* and non-identity G1.
std::vector<id::Message> all_messages(const algebra::GroupSuite& flat, id::SchemeId scheme, id::MessageType type,
                                      unsigned bits);

struct SweepResult {
  std::uint64_t cases = 0;
  std::uint64_t agreements = 0;
  std::uint64_t accepts = 0;
};

/// Sweeps every commitment, challenge and response for one key and compares
/// the verifier's decision on both backends.
SweepResult cross_backend_sweep(const DlogMap& map, const id::PublicKey& flat_pk);

}  // namespace pairid::session
