#include "pairid/id/protocols.hpp"

#include "pairid/sig/signatures.hpp"

namespace pairid::id {

namespace {

void check_length(const BlsidPublic& pk, const BitString& M) {
  if (M.bits != pk.n || (M.value >> M.bits) != 0) {
    fail(Errc::BadChallengeLength,
         "challenge has " + std::to_string(M.bits) + " bits, scheme uses n = " + std::to_string(pk.n));
  }
}

}  // namespace

G1Element blsid_respond(const GroupSuite& suite, const BlsidPublic& pk, const BlsidSecret& sk, const BitString& M) {
  check_length(pk, M);
  return sig::bls_sign(suite, pk.hash(), sk.x, M.to_bytes());
}

bool blsid_verify(const GroupSuite& suite, const BlsidPublic& pk, const BitString& M, const G1Element& sigma) {
  check_length(pk, M);
  return sig::bls_verify(suite, pk.hash(), pk.v, M.to_bytes(), sigma);
}

G1Element cdhid_respond(const GroupSuite& suite, const CdhidSecret& sk, const G1Element& h) {
  if (h == suite.g1_identity()) fail(Errc::IdentityChallenge, "CDHID challenge is the identity");
  return suite.g1_exp(h, sk.x);
}

bool cdhid_verify(const GroupSuite& suite, const CdhidPublic& pk, const G1Element& h, const G1Element& sigma) {
  return suite.pairing(suite.g1_generator(), sigma) == suite.pairing(pk.v, h);
}

SdhidResponse sdhid_respond(const GroupSuite& suite, const SdhidSecret& sk, const Scalar& m, Rng& rng) {
  SdhidResponse out;
  const auto s = sig::bb_sign(suite, {sk.x, sk.y}, m, rng, &out.redraws);
  out.sigma = s.sigma;
  out.r = s.r;
  return out;
}

bool sdhid_verify(const GroupSuite& suite, const SdhidPublic& pk, const Scalar& m, const G1Element& sigma,
                  const Scalar& r) {
  return sig::bb_verify(suite, {pk.u, pk.v, pk.z}, m, {sigma, r});
}

OwfidCommitment owfid_commit(const GroupSuite& suite, const OwfidPublic& pk, Rng& rng) {
  const G1Element R = suite.random_g1(rng);
  const Scalar r = suite.random_scalar(rng);
  return owfid_commit_with(suite, pk, {R, r});
}

OwfidCommitment owfid_commit_with(const GroupSuite& suite, const OwfidPublic& pk, const OwfidWitness& witness) {
  return {suite.g2_mul(suite.pairing(pk.P, witness.R), suite.g2_exp(pk.y, witness.r)), witness};
}

OwfidResponse owfid_respond(const GroupSuite& suite, const OwfidSecret& sk, const OwfidWitness& witness,
                            const Scalar& m) {
  return {suite.g1_mul(witness.R, suite.g1_exp(sk.Q, m)), witness.r + m * sk.s};
}

bool owfid_verify(const GroupSuite& suite, const OwfidPublic& pk, const G2Element& x, const Scalar& m,
                  const G1Element& T, const Scalar& a) {
  const G2Element lhs = suite.g2_mul(suite.g2_mul(suite.pairing(pk.P, T), suite.g2_exp(pk.y, a)), suite.g2_exp(pk.v, m));
  return lhs == x;
}

SclCommitment scl_commit(const GroupSuite& suite, const SclPublic& pk, Rng& rng) {
  return scl_commit_with(suite, pk, suite.random_nonzero_scalar(rng));
}

SclCommitment scl_commit_with(const GroupSuite& suite, const SclPublic& pk, const Scalar& w) {
  return {suite.g1_exp(pk.g, w), w};
}

G1Element scl_respond(const GroupSuite& suite, const SclPublic& pk, const SclSecret& sk, const Scalar& w,
                      const Scalar& r) {
  const Scalar d = sk.x * r + w;
  if (d.value() == 0) fail(Errc::ZeroExponent, "x r + w = 0; no response exists");
  return suite.g1_exp(pk.g, d.inverse());
}

SclChallenge scl_challenge(const GroupSuite& suite, const SclPublic& pk, const G1Element& tau, Rng& rng) {
  SclChallenge c{suite.scalar(0), suite.g1_identity(), 0};
  for (; c.redraws < 100; ++c.redraws) {
    c.r = suite.random_nonzero_scalar(rng);
    c.vr = suite.g1_exp(pk.v, c.r);
    if (suite.g1_mul(tau, c.vr) != suite.g1_identity()) return c;
  }
  fail(Errc::DegenerateSuite, "every drawn SCL challenge made tau v^r the identity");
}

bool scl_verify(const GroupSuite& suite, const SclPublic& pk, const G1Element& tau, const Scalar& r,
                const G1Element& sigma) {
  return scl_verify_prepared(suite, pk, tau, suite.g1_exp(pk.v, r), sigma);
}

bool scl_verify_prepared(const GroupSuite& suite, const SclPublic& pk, const G1Element& tau, const G1Element& vr,
                         const G1Element& sigma) {
  return suite.pairing(sigma, suite.g1_mul(tau, vr)) == pk.z;
}

HlsCommitment hls_commit(const GroupSuite& suite, const HlsPublic& pk, Rng& rng) {
  return hls_commit_with(suite, pk, suite.random_nonzero_scalar(rng));
}

HlsCommitment hls_commit_with(const GroupSuite& suite, const HlsPublic& pk, const Scalar& r) {
  return {suite.g2_exp(pk.z, r), r};
}

G1Element hls_respond(const GroupSuite& suite, const HlsPublic& pk, const HlsSecret& sk, const Scalar& r,
                      const Scalar& c) {
  return suite.g1_mul(suite.g1_exp(pk.P, r), suite.g1_exp(sk.Q, c));
}

bool hls_verify(const GroupSuite& suite, const HlsPublic& pk, const G2Element& w, const Scalar& c,
                const G1Element& sigma) {
  return suite.pairing(pk.P, sigma) == suite.g2_mul(w, suite.g2_exp(pk.v, c));
}

}  // namespace pairid::id
