#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pairid/algebra/group.hpp"
#include "pairid/bytes.hpp"
#include "pairid/error.hpp"
#include "pairid/record.hpp"
#include "pairid/rng.hpp"
#include "pairid/sig/hash.hpp"

namespace pairid::id {

using algebra::G1Element;
using algebra::G2Element;
using algebra::GroupSuite;
using algebra::Scalar;

enum class SchemeId {
  BLSID,  // BLS signature on a random n-bit challenge
  CDHID,  // sigma = h^x on a random group challenge
  SDHID,  // Boneh-Boyen signature on a random scalar challenge
  OWFID,  // witness-indistinguishable proof of a pairing preimage
  SCL,    // commit g^w, respond g^(1/(xr+w))
  HLS,    // commit e(P,P)^r, respond P^r Q^c
};

inline constexpr std::array<SchemeId, 6> kAllSchemes{SchemeId::BLSID, SchemeId::CDHID, SchemeId::SDHID,
                                                     SchemeId::OWFID, SchemeId::SCL,   SchemeId::HLS};

/// Lower-case name used on the command line and in files ("blsid", ...).
std::string scheme_name(SchemeId scheme);
SchemeId parse_scheme(const std::string& name);
/// Schemes with a prover commitment before the challenge.
bool has_commitment(SchemeId scheme);

/// A protocol value as it travels between parties.
using Item = std::variant<G1Element, G2Element, Scalar, BitString>;
enum class ItemKind { G1, G2, Zp, Bits };
ItemKind item_kind(const Item& item);
std::string item_kind_name(ItemKind kind);

struct BlsidPublic {
  G1Element v;
  unsigned n = 0;  // challenge bit length
  sig::HashMode hash_mode = sig::HashMode::Seeded;
  std::uint64_t hash_key = 0;

  sig::GroupHash hash() const { return sig::GroupHash(hash_mode, hash_key); }
  friend bool operator==(const BlsidPublic&, const BlsidPublic&) = default;
};
struct CdhidPublic {
  G1Element v;
  friend bool operator==(const CdhidPublic&, const CdhidPublic&) = default;
};
struct SdhidPublic {
  G1Element u;
  G1Element v;
  G2Element z;
  friend bool operator==(const SdhidPublic&, const SdhidPublic&) = default;
};
struct OwfidPublic {
  G1Element P;
  G2Element y;
  G2Element v;  // e(P,Q)^-1 y^-s
  friend bool operator==(const OwfidPublic&, const OwfidPublic&) = default;
};
struct SclPublic {
  G1Element g;
  G1Element v;
  G2Element z;
  friend bool operator==(const SclPublic&, const SclPublic&) = default;
};
struct HlsPublic {
  G1Element P;
  G1Element R;
  G1Element S;
  G2Element v;  // e(P,Q)
  G2Element z;  // e(P,P)
  friend bool operator==(const HlsPublic&, const HlsPublic&) = default;
};

struct BlsidSecret {
  Scalar x;
  friend bool operator==(const BlsidSecret&, const BlsidSecret&) = default;
};
struct CdhidSecret {
  Scalar x;
  friend bool operator==(const CdhidSecret&, const CdhidSecret&) = default;
};
struct SdhidSecret {
  Scalar x;
  Scalar y;
  friend bool operator==(const SdhidSecret&, const SdhidSecret&) = default;
};
struct OwfidSecret {
  G1Element Q;
  Scalar s;
  friend bool operator==(const OwfidSecret&, const OwfidSecret&) = default;
};
struct SclSecret {
  Scalar x;
  friend bool operator==(const SclSecret&, const SclSecret&) = default;
};
struct HlsSecret {
  G1Element Q;
  friend bool operator==(const HlsSecret&, const HlsSecret&) = default;
};

/// Alternative index equals the SchemeId value.
using PublicKey = std::variant<BlsidPublic, CdhidPublic, SdhidPublic, OwfidPublic, SclPublic, HlsPublic>;
using SecretKey = std::variant<BlsidSecret, CdhidSecret, SdhidSecret, OwfidSecret, SclSecret, HlsSecret>;

SchemeId scheme_of(const PublicKey& pk);
SchemeId scheme_of(const SecretKey& sk);

struct KeyPair {
  SchemeId scheme;
  PublicKey pk;
  SecretKey sk;
};

/// Typed access; throws KeyMismatch when the key belongs to another scheme.
template <class T, class V>
const T& key_as(const V& key) {
  if (const T* p = std::get_if<T>(&key)) return *p;
  fail(Errc::KeyMismatch, "key belongs to a different scheme");
}

struct SchemeParams {
  /// BLSID challenge length; 0 selects ceil(log2 p).
  unsigned n = 0;
  /// BLSID hash family; unset selects the backend default.
  std::optional<sig::HashMode> hash_mode{};
};

unsigned default_challenge_bits(std::uint64_t p);

/// Draws a key pair. Degenerate draws (zero exponents, identity bases) are
/// redrawn; after 100 redraws DegenerateSuite is thrown.
KeyPair keygen(SchemeId scheme, const GroupSuite& suite, Rng& rng, const SchemeParams& params = {});

/// Checks the defining key equation by direct evaluation.
bool key_consistent(const GroupSuite& suite, const KeyPair& kp);

/// Named components, in a fixed per-scheme order.
std::vector<std::pair<std::string, Item>> public_items(const PublicKey& pk);
std::vector<std::pair<std::string, Item>> secret_items(const SecretKey& sk);
/// Inverse of public_items / secret_items. BLSID parameters (n, hash) are
/// taken from `like` when rebuilding a BLSID public key.
PublicKey public_from_items(SchemeId scheme, const std::vector<Item>& items, const PublicKey* like = nullptr);
SecretKey secret_from_items(SchemeId scheme, const std::vector<Item>& items);

Bytes encode_item(const GroupSuite& suite, const Item& item);
/// Throws MalformedEncoding / NotOnCurve / NotInSubgroup. `bits` is used for
/// bit strings.
Item decode_item(const GroupSuite& suite, ItemKind kind, ByteView in, unsigned bits = 0);
std::size_t item_size(const GroupSuite& suite, ItemKind kind, unsigned bits = 0);

/// Key files: suite description, scheme, encoded components (secret lines
/// only when `with_secret`).
Record key_record(const GroupSuite& suite, const KeyPair& kp, bool with_secret);

struct LoadedKey {
  GroupSuite suite;
  SchemeId scheme;
  PublicKey pk;
  std::optional<SecretKey> sk;
};
/// Throws BadRecord or a decode error on malformed input.
LoadedKey load_key(const Record& record);

}  // namespace pairid::id
