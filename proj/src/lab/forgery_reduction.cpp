#include "pairid/lab/forgery_reduction.hpp"

namespace pairid::lab {

namespace {

/// B's prover interactions answered by the signing oracle.
class SigningPort final : public ProverPort {
 public:
  SigningPort(unsigned n, sig::SigningOracles& oracles) : n_(n), oracles_(oracles) {}

  std::optional<Message> open() override {
    ++opened_;
    return std::nullopt;
  }

  Message respond(const Message& challenge) override {
    id::check_layout(id::SchemeId::BLSID, challenge);
    if (challenge.type != id::MessageType::Challenge) fail(Errc::ProtocolViolation, "expected a challenge");
    const auto& M = std::get<BitString>(challenge.items[0]);
    if (M.bits != n_) fail(Errc::BadChallengeLength, "challenge length differs from n");
    queried_.insert(M.value);
    return {id::MessageType::Response, {oracles_.sign(M.to_bytes()).sigma}};
  }

  std::uint64_t interactions() const override { return opened_; }
  bool queried(std::uint64_t m) const { return queried_.count(m) != 0; }

 private:
  unsigned n_;
  sig::SigningOracles& oracles_;
  std::uint64_t opened_ = 0;
  std::set<std::uint64_t> queried_;
};

}  // namespace

sig::SignedMessage blsid_forgery_reduction(AttackerPair& attacker, const GroupSuite& suite,
                                           const sig::SigPublicKey& pk, sig::SigningOracles& oracles, unsigned n,
                                           Rng& coins) {
  if (n == 0 || n > 63) fail(Errc::InvalidArgument, "challenge length n must be in [1, 63]");
  const GroupSuite plain = suite.uncounted();
  // The hash key is unknown here; the attacker reaches H through the oracle.
  id::BlsidPublic bpk{pk.v, n, sig::default_hash_mode(suite.kind()), 0};
  AttackContext ctx{plain, bpk, [&oracles](ByteView m) { return oracles.hash(m); }};
  SigningPort port(n, oracles);

  const Bytes state = attacker.observe(ctx, port, coins);
  auto cheat = attacker.impersonate(ctx, state, coins);
  const BitString M{coins.below(1ULL << n), n};
  const Message resp = cheat->respond({id::MessageType::Challenge, {M}});
  id::check_layout(id::SchemeId::BLSID, resp);
  const sig::SignedMessage out{M.to_bytes(), std::get<G1Element>(resp.items[0]), plain.scalar(0)};

  if (port.queried(M.value)) fail(Errc::FreshnessCollision, "verifier challenge repeats a signing query");
  const G1Element h = oracles.hash(out.message);
  if (plain.pairing(plain.g1_generator(), out.sigma) != plain.pairing(pk.v, h)) {
    fail(Errc::AttackFailed, "cheating prover was rejected");
  }
  return out;
}

std::optional<sig::SignedMessage> BlsidReductionForger::forge(const GroupSuite& suite, sig::SigScheme scheme,
                                                              const sig::SigPublicKey& pk,
                                                              sig::SigningOracles& oracles, Rng& rng) {
  if (scheme != sig::SigScheme::Bls) fail(Errc::InvalidArgument, "the BLSID reduction forges BLS signatures only");
  try {
    return blsid_forgery_reduction(attacker_, suite, pk, oracles, n_, rng);
  } catch (const Error& e) {
    if (e.code() == Errc::FreshnessCollision) {
      ++collisions_;
      return std::nullopt;
    }
    if (e.code() == Errc::AttackFailed) {
      ++failed_;
      return std::nullopt;
    }
    throw;
  }
}

}  // namespace pairid::lab
