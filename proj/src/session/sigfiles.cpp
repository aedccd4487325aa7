#include "pairid/session/sigfiles.hpp"

#include "pairid/sig/signatures.hpp"

namespace pairid::session {

id::SchemeId key_scheme_for(sig::SigScheme scheme) {
  return scheme == sig::SigScheme::Bls ? id::SchemeId::BLSID : id::SchemeId::SDHID;
}

namespace {

void require_scheme(const id::LoadedKey& key, sig::SigScheme scheme) {
  if (key.scheme != key_scheme_for(scheme)) {
    fail(Errc::KeyMismatch, sig::sig_scheme_name(scheme) + " needs a " + id::scheme_name(key_scheme_for(scheme)) +
                                " key file, got " + id::scheme_name(key.scheme));
  }
}

}  // namespace

sig::SignedMessage sign_message(const id::LoadedKey& key, sig::SigScheme scheme, const Bytes& message, Rng& rng) {
  require_scheme(key, scheme);
  if (!key.sk) fail(Errc::KeyMismatch, "signing needs a key file with the secret key");
  const auto& suite = key.suite;
  if (scheme == sig::SigScheme::Bls) {
    const auto& pk = std::get<id::BlsidPublic>(key.pk);
    return {message, sig::bls_sign(suite, pk.hash(), std::get<id::BlsidSecret>(*key.sk).x, message), suite.scalar(0)};
  }
  algebra::Scalar m;
  try {
    m = suite.decode_scalar(message);
  } catch (const Error& e) {
    fail(Errc::InvalidArgument, std::string("BB messages are encoded scalars: ") + e.what());
  }
  if (m.is_zero()) fail(Errc::InvalidArgument, "BB message must be nonzero");
  const auto& sk = std::get<id::SdhidSecret>(*key.sk);
  const auto s = sig::bb_sign(suite, {sk.x, sk.y}, m, rng);
  return {message, s.sigma, s.r};
}

bool verify_message(const id::LoadedKey& key, sig::SigScheme scheme, const sig::SignedMessage& sm) {
  require_scheme(key, scheme);
  if (scheme == sig::SigScheme::Bls) {
    const auto& pk = std::get<id::BlsidPublic>(key.pk);
    return sig::verify_signed_message(scheme, key.suite, pk.hash(), {{}, pk.v, {}}, sm);
  }
  const auto& pk = std::get<id::SdhidPublic>(key.pk);
  return sig::verify_signed_message(scheme, key.suite, sig::GroupHash(sig::HashMode::Seeded), {pk.u, pk.v, pk.z}, sm);
}

Record signature_record(const algebra::GroupSuite& suite, sig::SigScheme scheme, const sig::SignedMessage& sm) {
  Record r;
  r.set("kind", "signature");
  r.set("scheme", sig::sig_scheme_name(scheme));
  r.set("message", to_hex(sm.message));
  r.set("sigma", to_hex(suite.encode(sm.sigma)));
  if (scheme == sig::SigScheme::Bb) r.set("r", to_hex(suite.encode(sm.r)));
  return r;
}

sig::SignedMessage load_signature(const Record& record, const algebra::GroupSuite& suite, sig::SigScheme scheme) {
  if (record.get("kind") != "signature") fail(Errc::BadRecord, "not a signature record");
  if (sig::parse_sig_scheme(record.get("scheme")) != scheme) fail(Errc::BadRecord, "signature is for another scheme");
  sig::SignedMessage sm{from_hex(record.get("message")), suite.decode_g1(from_hex(record.get("sigma"))), suite.scalar(0)};
  if (scheme == sig::SigScheme::Bb) sm.r = suite.decode_scalar(from_hex(record.get("r")));
  return sm;
}

}  // namespace pairid::session
