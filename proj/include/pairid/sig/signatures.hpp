#pragma once

#include <functional>

#include "pairid/algebra/group.hpp"
#include "pairid/rng.hpp"
#include "pairid/sig/hash.hpp"

namespace pairid::sig {

using algebra::G2Element;
using algebra::Scalar;

struct BlsKeyPair {
  Scalar x;
  G1Element v;  // g^x
};

BlsKeyPair bls_keygen(const GroupSuite& suite, Rng& rng);
/// sigma = H(M)^x.
G1Element bls_sign(const GroupSuite& suite, const GroupHash& hash, const Scalar& x, ByteView message);
/// Valid iff e(g, sigma) = e(v, H(M)).
bool bls_verify(const GroupSuite& suite, const GroupHash& hash, const G1Element& v, ByteView message,
                const G1Element& sigma);

struct BbSecretKey {
  Scalar x;
  Scalar y;
};

struct BbPublicKey {
  G1Element u;  // g^x
  G1Element v;  // g^y
  G2Element z;  // e(g, g)
};

struct BbKeyPair {
  BbSecretKey sk;
  BbPublicKey pk;
};

struct BbSignature {
  G1Element sigma;
  Scalar r;
};

BbKeyPair bb_keygen(const GroupSuite& suite, Rng& rng);

/// sigma = g^(1/(x + m + y r)) with r drawn from Z_p*; r is redrawn while
/// x + m + y r = 0. `redraws`, if given, receives the number of redraws.
BbSignature bb_sign(const GroupSuite& suite, const BbSecretKey& sk, const Scalar& m, Rng& rng,
                    unsigned* redraws = nullptr);
/// Same, with the r candidates supplied by `draw_r`.
BbSignature bb_sign(const GroupSuite& suite, const BbSecretKey& sk, const Scalar& m,
                    const std::function<Scalar()>& draw_r, unsigned* redraws = nullptr);
/// Valid iff m, r are nonzero and e(sigma, u g^m v^r) = z.
bool bb_verify(const GroupSuite& suite, const BbPublicKey& pk, const Scalar& m, const BbSignature& sig);

}  // namespace pairid::sig
