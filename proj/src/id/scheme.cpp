#include "pairid/id/scheme.hpp"

#include "pairid/curve/tate.hpp"
#include "pairid/sig/signatures.hpp"

namespace pairid::id {

std::string scheme_name(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::BLSID: return "blsid";
    case SchemeId::CDHID: return "cdhid";
    case SchemeId::SDHID: return "sdhid";
    case SchemeId::OWFID: return "owfid";
    case SchemeId::SCL: return "scl";
    case SchemeId::HLS: return "hls";
  }
  return "?";
}

SchemeId parse_scheme(const std::string& name) {
  for (SchemeId s : kAllSchemes) {
    if (scheme_name(s) == name) return s;
  }
  fail(Errc::InvalidArgument, "unknown scheme '" + name + "' (blsid, cdhid, sdhid, owfid, scl, hls)");
}

bool has_commitment(SchemeId scheme) {
  return scheme == SchemeId::OWFID || scheme == SchemeId::SCL || scheme == SchemeId::HLS;
}

ItemKind item_kind(const Item& item) { return static_cast<ItemKind>(item.index()); }

std::string item_kind_name(ItemKind kind) {
  switch (kind) {
    case ItemKind::G1: return "G1";
    case ItemKind::G2: return "G2";
    case ItemKind::Zp: return "Zp";
    case ItemKind::Bits: return "bits";
  }
  return "?";
}

SchemeId scheme_of(const PublicKey& pk) { return static_cast<SchemeId>(pk.index()); }
SchemeId scheme_of(const SecretKey& sk) { return static_cast<SchemeId>(sk.index()); }

unsigned default_challenge_bits(std::uint64_t p) { return bit_length(p - 1); }

namespace {

constexpr int kMaxRedraws = 100;

G1Element nonidentity_g1(const GroupSuite& suite, Rng& rng) {
  for (int i = 0; i < kMaxRedraws; ++i) {
    const G1Element x = suite.random_g1(rng);
    if (x != suite.g1_identity()) return x;
  }
  fail(Errc::DegenerateSuite, "no non-identity G1 element in 100 draws");
}

G2Element nonidentity_g2(const GroupSuite& suite, Rng& rng) {
  for (int i = 0; i < kMaxRedraws; ++i) {
    const G2Element x = suite.random_g2(rng);
    if (x != suite.g2_identity()) return x;
  }
  fail(Errc::DegenerateSuite, "no non-identity G2 element in 100 draws");
}

}  // namespace

KeyPair keygen(SchemeId scheme, const GroupSuite& counted_suite, Rng& rng, const SchemeParams& params) {
  const GroupSuite suite = counted_suite.uncounted();
  const G1Element g = suite.g1_generator();
  switch (scheme) {
    case SchemeId::BLSID: {
      const Scalar x = suite.random_nonzero_scalar(rng);
      BlsidPublic pk{suite.g1_exp(g, x), params.n ? params.n : default_challenge_bits(suite.p()),
                     params.hash_mode.value_or(sig::default_hash_mode(suite.kind())), rng.next()};
      if (pk.n > 63) fail(Errc::InvalidArgument, "challenge length n must be at most 63 bits");
      return {scheme, pk, BlsidSecret{x}};
    }
    case SchemeId::CDHID: {
      const Scalar x = suite.random_nonzero_scalar(rng);
      return {scheme, CdhidPublic{suite.g1_exp(g, x)}, CdhidSecret{x}};
    }
    case SchemeId::SDHID: {
      const auto kp = sig::bb_keygen(suite, rng);
      return {scheme, SdhidPublic{kp.pk.u, kp.pk.v, kp.pk.z}, SdhidSecret{kp.sk.x, kp.sk.y}};
    }
    case SchemeId::OWFID: {
      const G1Element P = nonidentity_g1(suite, rng);
      const G1Element Q = suite.random_g1(rng);
      const G2Element y = nonidentity_g2(suite, rng);
      const Scalar s = suite.random_nonzero_scalar(rng);
      const G2Element v = suite.g2_inv(suite.g2_mul(suite.pairing(P, Q), suite.g2_exp(y, s)));
      return {scheme, OwfidPublic{P, y, v}, OwfidSecret{Q, s}};
    }
    case SchemeId::SCL: {
      const G1Element gs = nonidentity_g1(suite, rng);
      const Scalar x = suite.random_nonzero_scalar(rng);
      return {scheme, SclPublic{gs, suite.g1_exp(gs, x), suite.pairing(gs, gs)}, SclSecret{x}};
    }
    case SchemeId::HLS: {
      const G1Element P = nonidentity_g1(suite, rng);
      const Scalar a = suite.random_nonzero_scalar(rng);
      const Scalar b = suite.random_nonzero_scalar(rng);
      const G1Element Q = suite.g1_exp(P, a * b);
      return {scheme, HlsPublic{P, suite.g1_exp(P, a), suite.g1_exp(P, b), suite.pairing(P, Q), suite.pairing(P, P)},
              HlsSecret{Q}};
    }
  }
  fail(Errc::InvalidArgument, "unknown scheme");
}

bool key_consistent(const GroupSuite& counted_suite, const KeyPair& kp) {
  const GroupSuite suite = counted_suite.uncounted();
  if (scheme_of(kp.pk) != kp.scheme || scheme_of(kp.sk) != kp.scheme) return false;
  const G1Element g = suite.g1_generator();
  switch (kp.scheme) {
    case SchemeId::BLSID: {
      const auto& pk = key_as<BlsidPublic>(kp.pk);
      return pk.v == suite.g1_exp(g, key_as<BlsidSecret>(kp.sk).x);
    }
    case SchemeId::CDHID:
      return key_as<CdhidPublic>(kp.pk).v == suite.g1_exp(g, key_as<CdhidSecret>(kp.sk).x);
    case SchemeId::SDHID: {
      const auto& pk = key_as<SdhidPublic>(kp.pk);
      const auto& sk = key_as<SdhidSecret>(kp.sk);
      return pk.u == suite.g1_exp(g, sk.x) && pk.v == suite.g1_exp(g, sk.y) && pk.z == suite.g2_generator();
    }
    case SchemeId::OWFID: {
      const auto& pk = key_as<OwfidPublic>(kp.pk);
      const auto& sk = key_as<OwfidSecret>(kp.sk);
      const G2Element lhs = suite.g2_mul(suite.g2_mul(suite.pairing(pk.P, sk.Q), suite.g2_exp(pk.y, sk.s)), pk.v);
      return lhs == suite.g2_identity();
    }
    case SchemeId::SCL: {
      const auto& pk = key_as<SclPublic>(kp.pk);
      return pk.v == suite.g1_exp(pk.g, key_as<SclSecret>(kp.sk).x) && pk.z == suite.pairing(pk.g, pk.g);
    }
    case SchemeId::HLS: {
      const auto& pk = key_as<HlsPublic>(kp.pk);
      const auto& sk = key_as<HlsSecret>(kp.sk);
      return pk.v == suite.pairing(pk.P, sk.Q) && pk.z == suite.pairing(pk.P, pk.P) &&
             algebra::ddh_solve(suite, pk.P, pk.R, pk.S, sk.Q);
    }
  }
  return false;
}

std::vector<std::pair<std::string, Item>> public_items(const PublicKey& pk) {
  switch (scheme_of(pk)) {
    case SchemeId::BLSID: return {{"v", std::get<BlsidPublic>(pk).v}};
    case SchemeId::CDHID: return {{"v", std::get<CdhidPublic>(pk).v}};
    case SchemeId::SDHID: {
      const auto& k = std::get<SdhidPublic>(pk);
      return {{"u", k.u}, {"v", k.v}, {"z", k.z}};
    }
    case SchemeId::OWFID: {
      const auto& k = std::get<OwfidPublic>(pk);
      return {{"P", k.P}, {"y", k.y}, {"v", k.v}};
    }
    case SchemeId::SCL: {
      const auto& k = std::get<SclPublic>(pk);
      return {{"g", k.g}, {"v", k.v}, {"z", k.z}};
    }
    case SchemeId::HLS: {
      const auto& k = std::get<HlsPublic>(pk);
      return {{"P", k.P}, {"R", k.R}, {"S", k.S}, {"v", k.v}, {"z", k.z}};
    }
  }
  return {};
}

std::vector<std::pair<std::string, Item>> secret_items(const SecretKey& sk) {
  switch (scheme_of(sk)) {
    case SchemeId::BLSID: return {{"x", std::get<BlsidSecret>(sk).x}};
    case SchemeId::CDHID: return {{"x", std::get<CdhidSecret>(sk).x}};
    case SchemeId::SDHID: return {{"x", std::get<SdhidSecret>(sk).x}, {"y", std::get<SdhidSecret>(sk).y}};
    case SchemeId::OWFID: return {{"Q", std::get<OwfidSecret>(sk).Q}, {"s", std::get<OwfidSecret>(sk).s}};
    case SchemeId::SCL: return {{"x", std::get<SclSecret>(sk).x}};
    case SchemeId::HLS: return {{"Q", std::get<HlsSecret>(sk).Q}};
  }
  return {};
}

namespace {

template <class T>
const T& item_as(const std::vector<Item>& items, std::size_t i) {
  if (i >= items.size()) fail(Errc::KeyMismatch, "too few key components");
  if (const T* p = std::get_if<T>(&items[i])) return *p;
  fail(Errc::KeyMismatch, "key component " + std::to_string(i) + " has the wrong type");
}

void expect_count(const std::vector<Item>& items, std::size_t n) {
  if (items.size() != n) fail(Errc::KeyMismatch, "expected " + std::to_string(n) + " key components");
}

std::vector<std::pair<std::string, ItemKind>> public_layout(SchemeId scheme) {
  using K = ItemKind;
  switch (scheme) {
    case SchemeId::BLSID:
    case SchemeId::CDHID: return {{"v", K::G1}};
    case SchemeId::SDHID: return {{"u", K::G1}, {"v", K::G1}, {"z", K::G2}};
    case SchemeId::OWFID: return {{"P", K::G1}, {"y", K::G2}, {"v", K::G2}};
    case SchemeId::SCL: return {{"g", K::G1}, {"v", K::G1}, {"z", K::G2}};
    case SchemeId::HLS: return {{"P", K::G1}, {"R", K::G1}, {"S", K::G1}, {"v", K::G2}, {"z", K::G2}};
  }
  return {};
}

std::vector<std::pair<std::string, ItemKind>> secret_layout(SchemeId scheme) {
  using K = ItemKind;
  switch (scheme) {
    case SchemeId::BLSID:
    case SchemeId::CDHID:
    case SchemeId::SCL: return {{"x", K::Zp}};
    case SchemeId::SDHID: return {{"x", K::Zp}, {"y", K::Zp}};
    case SchemeId::OWFID: return {{"Q", K::G1}, {"s", K::Zp}};
    case SchemeId::HLS: return {{"Q", K::G1}};
  }
  return {};
}

}  // namespace

PublicKey public_from_items(SchemeId scheme, const std::vector<Item>& it, const PublicKey* like) {
  expect_count(it, public_layout(scheme).size());
  switch (scheme) {
    case SchemeId::BLSID: {
      BlsidPublic pk;
      if (like) pk = key_as<BlsidPublic>(*like);
      pk.v = item_as<G1Element>(it, 0);
      return pk;
    }
    case SchemeId::CDHID: return CdhidPublic{item_as<G1Element>(it, 0)};
    case SchemeId::SDHID:
      return SdhidPublic{item_as<G1Element>(it, 0), item_as<G1Element>(it, 1), item_as<G2Element>(it, 2)};
    case SchemeId::OWFID:
      return OwfidPublic{item_as<G1Element>(it, 0), item_as<G2Element>(it, 1), item_as<G2Element>(it, 2)};
    case SchemeId::SCL:
      return SclPublic{item_as<G1Element>(it, 0), item_as<G1Element>(it, 1), item_as<G2Element>(it, 2)};
    case SchemeId::HLS:
      return HlsPublic{item_as<G1Element>(it, 0), item_as<G1Element>(it, 1), item_as<G1Element>(it, 2),
                       item_as<G2Element>(it, 3), item_as<G2Element>(it, 4)};
  }
  fail(Errc::InvalidArgument, "unknown scheme");
}

SecretKey secret_from_items(SchemeId scheme, const std::vector<Item>& it) {
  expect_count(it, secret_layout(scheme).size());
  switch (scheme) {
    case SchemeId::BLSID: return BlsidSecret{item_as<Scalar>(it, 0)};
    case SchemeId::CDHID: return CdhidSecret{item_as<Scalar>(it, 0)};
    case SchemeId::SDHID: return SdhidSecret{item_as<Scalar>(it, 0), item_as<Scalar>(it, 1)};
    case SchemeId::OWFID: return OwfidSecret{item_as<G1Element>(it, 0), item_as<Scalar>(it, 1)};
    case SchemeId::SCL: return SclSecret{item_as<Scalar>(it, 0)};
    case SchemeId::HLS: return HlsSecret{item_as<G1Element>(it, 0)};
  }
  fail(Errc::InvalidArgument, "unknown scheme");
}

Bytes encode_item(const GroupSuite& suite, const Item& item) {
  return std::visit(
      [&](const auto& v) -> Bytes {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BitString>) {
          return v.to_bytes();
        } else {
          return suite.encode(v);
        }
      },
      item);
}

Item decode_item(const GroupSuite& suite, ItemKind kind, ByteView in, unsigned bits) {
  switch (kind) {
    case ItemKind::G1: return suite.decode_g1(in);
    case ItemKind::G2: return suite.decode_g2(in);
    case ItemKind::Zp: return suite.decode_scalar(in);
    case ItemKind::Bits: return BitString::from_bytes(in, bits);
  }
  fail(Errc::MalformedEncoding, "unknown item kind");
}

std::size_t item_size(const GroupSuite& suite, ItemKind kind, unsigned bits) {
  switch (kind) {
    case ItemKind::G1: return suite.g1_size();
    case ItemKind::G2: return suite.g2_size();
    case ItemKind::Zp: return suite.scalar_size();
    case ItemKind::Bits: return (bits + 7) / 8;
  }
  return 0;
}

Record key_record(const GroupSuite& suite, const KeyPair& kp, bool with_secret) {
  Record r;
  r.set("kind", with_secret ? "keypair" : "public");
  r.set("scheme", scheme_name(kp.scheme));
  for (const auto& [k, v] : suite.backend().describe()) r.set("suite." + k, v);
  for (const auto& [name, item] : public_items(kp.pk)) r.set("pk." + name, to_hex(encode_item(suite, item)));
  if (kp.scheme == SchemeId::BLSID) {
    const auto& pk = std::get<BlsidPublic>(kp.pk);
    r.set("pk.n", std::to_string(pk.n));
    r.set("pk.hash", sig::hash_mode_name(pk.hash_mode));
    r.set("pk.hash_key", std::to_string(pk.hash_key));
  }
  if (with_secret) {
    for (const auto& [name, item] : secret_items(kp.sk)) r.set("sk." + name, to_hex(encode_item(suite, item)));
  }
  return r;
}

LoadedKey load_key(const Record& record) {
  const SchemeId scheme = parse_scheme(record.get("scheme"));
  const GroupSuite suite = curve::suite_from_record(record.subrecord("suite.").to_map());

  std::vector<Item> pub;
  for (const auto& [name, kind] : public_layout(scheme)) {
    pub.push_back(decode_item(suite, kind, from_hex(record.get("pk." + name))));
  }
  PublicKey like = BlsidPublic{};
  if (scheme == SchemeId::BLSID) {
    auto& b = std::get<BlsidPublic>(like);
    b.n = static_cast<unsigned>(record.get_u64("pk.n"));
    if (b.n == 0 || b.n > 63) fail(Errc::BadRecord, "pk.n out of range");
    b.hash_mode = sig::parse_hash_mode(record.get("pk.hash"));
    b.hash_key = record.get_u64("pk.hash_key");
  }
  LoadedKey out{suite, scheme, public_from_items(scheme, pub, &like), std::nullopt};

  const std::string kind = record.get("kind");
  if (kind == "keypair") {
    std::vector<Item> sec;
    for (const auto& [name, k] : secret_layout(scheme)) {
      sec.push_back(decode_item(suite, k, from_hex(record.get("sk." + name))));
    }
    out.sk = secret_from_items(scheme, sec);
    if (!key_consistent(suite, {scheme, out.pk, *out.sk})) fail(Errc::KeyMismatch, "secret key does not match public key");
  } else if (kind != "public") {
    fail(Errc::BadRecord, "unknown key kind '" + kind + "'");
  }
  return out;
}

}  // namespace pairid::id
