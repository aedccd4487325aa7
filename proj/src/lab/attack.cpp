#include "pairid/lab/attack.hpp"

namespace pairid::lab {

AttackContext make_context(const GroupSuite& suite, const id::PublicKey& pk) {
  AttackContext ctx{suite, pk, {}};
  if (const auto* b = std::get_if<id::BlsidPublic>(&pk)) {
    ctx.hash = [suite, h = b->hash()](ByteView m) { return h(suite, m); };
  }
  return ctx;
}

HonestProverPort::HonestProverPort(const GroupSuite& suite, id::KeyPair kp, std::uint64_t budget, Rng coins)
    : suite_(suite), kp_(std::move(kp)), budget_(budget), coins_(coins) {}

std::optional<Message> HonestProverPort::open() {
  if (count_ >= budget_) fail(Errc::BudgetExceeded, "prover interaction budget of " + std::to_string(budget_) + " spent");
  ++count_;
  current_.emplace(suite_, kp_, Rng(coins_.next()));
  if (!id::has_commitment(kp_.scheme)) return std::nullopt;
  return current_->commit();
}

Message HonestProverPort::respond(const Message& challenge) {
  if (!current_) fail(Errc::ProtocolViolation, "no open interaction");
  return current_->respond(challenge);
}

id::Item random_challenge(const GroupSuite& suite, const id::PublicKey& pk, Rng& rng) {
  switch (id::scheme_of(pk)) {
    case id::SchemeId::BLSID: {
      const unsigned n = std::get<id::BlsidPublic>(pk).n;
      return BitString{rng.below(1ULL << n), n};
    }
    case id::SchemeId::CDHID: return suite.random_g1_nonidentity(rng);
    default: return suite.random_nonzero_scalar(rng);
  }
}

AttackOutcome run_attack(AttackerPair& attacker, const AttackContext& ctx, ProverPort& prover, std::uint64_t row_seed,
                         const std::optional<id::Item>& challenge, std::uint64_t verifier_seed) {
  const id::SchemeId scheme = id::scheme_of(ctx.pk);
  AttackOutcome out;
  out.transcript.scheme = scheme;
  out.transcript.seed = row_seed;

  Rng coins(row_seed, kAttackerStream);
  id::Verifier verifier(ctx.suite, scheme, ctx.pk, Rng(derive_seed(row_seed, verifier_seed), kVerifierStream));
  try {
    const Bytes state = attacker.observe(ctx, prover, coins);
    out.interactions = prover.interactions();
    auto cheat = attacker.impersonate(ctx, state, coins);
    if (id::has_commitment(scheme)) {
      auto c = cheat->commit();
      if (!c) fail(Errc::ProtocolViolation, "cheating prover sent no commitment");
      out.transcript.commitment = *c;
      verifier.receive_commitment(*c);
    }
    out.transcript.challenge = challenge ? verifier.challenge_with(*challenge) : verifier.challenge();
    out.transcript.response = cheat->respond(out.transcript.challenge);
    out.transcript.accepted = verifier.receive_response(*out.transcript.response);
  } catch (const Error& e) {
    out.interactions = prover.interactions();
    out.budget_exceeded = e.code() == Errc::BudgetExceeded;
    out.transcript.accepted = false;
    out.transcript.abort_reason = e.what();
  }
  return out;
}

AttackOutcome run_attack(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                         std::uint64_t row_seed, const std::optional<id::Item>& challenge, std::uint64_t verifier_seed) {
  HonestProverPort port(suite, kp, q, Rng(row_seed, kProverStream));
  return run_attack(attacker, make_context(suite, kp.pk), port, row_seed, challenge, verifier_seed);
}

double estimate_success(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                        std::uint64_t sessions, std::uint64_t seed) {
  if (sessions == 0) fail(Errc::InvalidArgument, "success estimate needs at least one session");
  Rng rows(seed, 0x5e55);
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; i < sessions; ++i) accepted += run_attack(attacker, suite, kp, q, rows.next()).accepted();
  return static_cast<double>(accepted) / static_cast<double>(sessions);
}

}  // namespace pairid::lab
