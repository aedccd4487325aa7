#pragma once

// Signing with identification key files: a BLSID key pair doubles as a BLS
// key (same x, v and hash), an SDHID key pair as a Boneh-Boyen key.

#include "pairid/id/scheme.hpp"
#include "pairid/record.hpp"
#include "pairid/sig/forgery.hpp"

namespace pairid::session {

/// Identification scheme whose key files carry keys of `scheme`.
id::SchemeId key_scheme_for(sig::SigScheme scheme);

/// BB messages must be encoded scalars in Z_p* (InvalidArgument otherwise).
/// Throws KeyMismatch for a key of the wrong scheme or without a secret.
sig::SignedMessage sign_message(const id::LoadedKey& key, sig::SigScheme scheme, const Bytes& message, Rng& rng);
bool verify_message(const id::LoadedKey& key, sig::SigScheme scheme, const sig::SignedMessage& sm);

Record signature_record(const algebra::GroupSuite& suite, sig::SigScheme scheme, const sig::SignedMessage& sm);
/// Throws BadRecord or a decode error.
sig::SignedMessage load_signature(const Record& record, const algebra::GroupSuite& suite, sig::SigScheme scheme);

}  // namespace pairid::session
