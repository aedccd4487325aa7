#pragma once

#include "pairid/id/scheme.hpp"

// Per-scheme prover and verifier steps. Exponentiations and pairings are
// charged to whatever role the passed suite counts for.

namespace pairid::id {

// BLSID: challenge M in {0,1}^n, response sigma = H(M)^x.
/// Throws BadChallengeLength unless |M| = n.
G1Element blsid_respond(const GroupSuite& suite, const BlsidPublic& pk, const BlsidSecret& sk, const BitString& M);
/// e(g, sigma) = e(v, H(M)). Throws BadChallengeLength unless |M| = n.
bool blsid_verify(const GroupSuite& suite, const BlsidPublic& pk, const BitString& M, const G1Element& sigma);

// CDHID: challenge h in G1 \ {1}, response sigma = h^x.
/// Throws IdentityChallenge on h = 1.
G1Element cdhid_respond(const GroupSuite& suite, const CdhidSecret& sk, const G1Element& h);
/// e(g, sigma) = e(v, h).
bool cdhid_verify(const GroupSuite& suite, const CdhidPublic& pk, const G1Element& h, const G1Element& sigma);

// SDHID: challenge m in Z_p*, response a Boneh-Boyen signature (sigma, r).
struct SdhidResponse {
  G1Element sigma;
  Scalar r;
  unsigned redraws = 0;  // times x + m + y r hit zero
};
SdhidResponse sdhid_respond(const GroupSuite& suite, const SdhidSecret& sk, const Scalar& m, Rng& rng);
/// e(sigma, u g^m v^r) = z.
bool sdhid_verify(const GroupSuite& suite, const SdhidPublic& pk, const Scalar& m, const G1Element& sigma,
                  const Scalar& r);

// OWFID: commitment x = e(P,R) y^r, challenge m in Z_p*, response
// (T, a) = (R Q^m, r + m s).
struct OwfidWitness {
  G1Element R;
  Scalar r;
};
struct OwfidCommitment {
  G2Element x;
  OwfidWitness witness;
};
struct OwfidResponse {
  G1Element T;
  Scalar a;
};
/// R uniform in G1, r uniform in Z_p.
OwfidCommitment owfid_commit(const GroupSuite& suite, const OwfidPublic& pk, Rng& rng);
OwfidCommitment owfid_commit_with(const GroupSuite& suite, const OwfidPublic& pk, const OwfidWitness& witness);
OwfidResponse owfid_respond(const GroupSuite& suite, const OwfidSecret& sk, const OwfidWitness& witness,
                            const Scalar& m);
/// e(P,T) y^a v^m = x.
bool owfid_verify(const GroupSuite& suite, const OwfidPublic& pk, const G2Element& x, const Scalar& m,
                  const G1Element& T, const Scalar& a);

// SCL: commitment tau = g^w, challenge r in Z_p*, response g^(1/(xr+w)).
struct SclCommitment {
  G1Element tau;
  Scalar w;
};
SclCommitment scl_commit(const GroupSuite& suite, const SclPublic& pk, Rng& rng);
SclCommitment scl_commit_with(const GroupSuite& suite, const SclPublic& pk, const Scalar& w);
/// Throws ZeroExponent when x r + w = 0.
G1Element scl_respond(const GroupSuite& suite, const SclPublic& pk, const SclSecret& sk, const Scalar& w,
                      const Scalar& r);
/// Verifier challenge with v^r precomputed. r is redrawn while tau v^r is the
/// identity, i.e. while no response could satisfy the check.
struct SclChallenge {
  Scalar r;
  G1Element vr;
  unsigned redraws = 0;
};
SclChallenge scl_challenge(const GroupSuite& suite, const SclPublic& pk, const G1Element& tau, Rng& rng);
/// e(sigma, tau v^r) = z.
bool scl_verify(const GroupSuite& suite, const SclPublic& pk, const G1Element& tau, const Scalar& r,
                const G1Element& sigma);
bool scl_verify_prepared(const GroupSuite& suite, const SclPublic& pk, const G1Element& tau, const G1Element& vr,
                         const G1Element& sigma);

// HLS: commitment w = z^r (r stays with the prover), challenge c in Z_p*,
// response sigma = P^r Q^c.
struct HlsCommitment {
  G2Element w;
  Scalar r;
};
HlsCommitment hls_commit(const GroupSuite& suite, const HlsPublic& pk, Rng& rng);
HlsCommitment hls_commit_with(const GroupSuite& suite, const HlsPublic& pk, const Scalar& r);
G1Element hls_respond(const GroupSuite& suite, const HlsPublic& pk, const HlsSecret& sk, const Scalar& r,
                      const Scalar& c);
/// e(P, sigma) = w v^c.
bool hls_verify(const GroupSuite& suite, const HlsPublic& pk, const G2Element& w, const Scalar& c,
                const G1Element& sigma);

}  // namespace pairid::id
