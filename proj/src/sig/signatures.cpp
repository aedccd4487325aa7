#include "pairid/sig/signatures.hpp"

#include "pairid/error.hpp"

namespace pairid::sig {

BlsKeyPair bls_keygen(const GroupSuite& suite, Rng& rng) {
  const Scalar x = suite.random_nonzero_scalar(rng);
  return {x, suite.g1_exp(suite.g1_generator(), x)};
}

G1Element bls_sign(const GroupSuite& suite, const GroupHash& hash, const Scalar& x, ByteView message) {
  return suite.g1_exp(hash(suite, message), x);
}

bool bls_verify(const GroupSuite& suite, const GroupHash& hash, const G1Element& v, ByteView message,
                const G1Element& sigma) {
  const G1Element h = hash(suite, message);
  return suite.pairing(suite.g1_generator(), sigma) == suite.pairing(v, h);
}

BbKeyPair bb_keygen(const GroupSuite& suite, Rng& rng) {
  const Scalar x = suite.random_nonzero_scalar(rng);
  const Scalar y = suite.random_nonzero_scalar(rng);
  const G1Element g = suite.g1_generator();
  return {{x, y}, {suite.g1_exp(g, x), suite.g1_exp(g, y), suite.g2_generator()}};
}

BbSignature bb_sign(const GroupSuite& suite, const BbSecretKey& sk, const Scalar& m, Rng& rng, unsigned* redraws) {
  return bb_sign(suite, sk, m, [&] { return suite.random_nonzero_scalar(rng); }, redraws);
}

BbSignature bb_sign(const GroupSuite& suite, const BbSecretKey& sk, const Scalar& m,
                    const std::function<Scalar()>& draw_r, unsigned* redraws) {
  if (m.value() == 0) fail(Errc::InvalidArgument, "Boneh-Boyen messages live in Z_p*");
  unsigned tries = 0;
  for (; tries < 100; ++tries) {
    const Scalar r = draw_r();
    const Scalar d = sk.x + m + sk.y * r;
    if (d.value() == 0) continue;
    if (redraws) *redraws = tries;
    return {suite.g1_exp(suite.g1_generator(), d.inverse()), r};
  }
  fail(Errc::DegenerateSuite, "no usable r after 100 draws");
}

bool bb_verify(const GroupSuite& suite, const BbPublicKey& pk, const Scalar& m, const BbSignature& sig) {
  if (m.value() == 0 || sig.r.value() == 0) return false;
  const G1Element base = suite.g1_mul(suite.g1_mul(pk.u, suite.g1_exp(suite.g1_generator(), m)),
                                      suite.g1_exp(pk.v, sig.r));
  return suite.pairing(sig.sigma, base) == pk.z;
}

}  // namespace pairid::sig
