#include "pairid/lab/scripted.hpp"

#include <memory>
#include <set>

#include "pairid/algebra/transparent.hpp"

namespace pairid::lab {

namespace {

using algebra::transparent_log;
using id::ItemKind;
using id::MessageType;
using id::SchemeId;

Bytes u64_bytes(std::uint64_t v) {
  Bytes out;
  put_be(out, v, 8);
  return out;
}

std::uint64_t fold(std::uint64_t seed, const Bytes& bytes) {
  for (std::uint8_t b : bytes) seed = derive_seed(seed, b);
  return seed;
}

/// Every honest message B may send: BLSID challenges are kept distinct.
id::Item observation_challenge(const GroupSuite& suite, const id::PublicKey& pk, Rng& coins,
                               std::set<std::uint64_t>& used) {
  if (const auto* b = std::get_if<id::BlsidPublic>(&pk)) {
    const std::uint64_t space = 1ULL << b->n;
    if (used.size() >= space) return BitString{coins.below(space), b->n};
    for (;;) {
      const std::uint64_t m = coins.below(space);
      if (used.insert(m).second) return BitString{m, b->n};
    }
  }
  return random_challenge(suite, pk, coins);
}

class KnowsKeyProver final : public CheatingProver {
 public:
  KnowsKeyProver(const AttackContext& ctx, id::SecretKey sk, std::uint64_t token, double success, Rng& coins)
      : ctx_(ctx),
        sk_(sk),
        prover_(ctx.suite, id::KeyPair{id::scheme_of(ctx.pk), ctx.pk, sk}, Rng(coins.next())),
        token_(token),
        success_(success) {}

  std::optional<Message> commit() override {
    if (!id::has_commitment(id::scheme_of(ctx_.pk))) return std::nullopt;
    return prover_.commit();
  }

  Message respond(const Message& challenge) override {
    Message out;
    if (const auto* b = std::get_if<id::BlsidPublic>(&ctx_.pk)) {
      // H is only reachable through the context oracle inside reductions.
      id::check_layout(SchemeId::BLSID, challenge);
      const auto& M = std::get<BitString>(challenge.items.at(0));
      if (M.bits != b->n) fail(Errc::BadChallengeLength, "challenge length differs from n");
      const G1Element h = ctx_.hash(M.to_bytes());
      out = {MessageType::Response, {ctx_.suite.g1_exp(h, std::get<id::BlsidSecret>(sk_).x)}};
    } else {
      out = prover_.respond(challenge);
    }
    const Bytes encoded = id::encode_payload(ctx_.suite, challenge);
    if (!Rng(fold(token_, encoded)).bernoulli(success_)) {
      auto& first = std::get<G1Element>(out.items.at(0));
      first = ctx_.suite.g1_mul(first, ctx_.suite.g1_generator());
    }
    return out;
  }

 private:
  AttackContext ctx_;
  id::SecretKey sk_;
  id::Prover prover_;
  std::uint64_t token_;
  double success_;
};

class RandomProver final : public CheatingProver {
 public:
  RandomProver(const AttackContext& ctx, bool identity, Rng& coins)
      : ctx_(ctx), identity_(identity), rng_(coins.next()) {}

  std::optional<Message> commit() override {
    const SchemeId scheme = id::scheme_of(ctx_.pk);
    if (!id::has_commitment(scheme)) return std::nullopt;
    return draw(scheme, MessageType::Commitment, false);
  }

  Message respond(const Message&) override {
    return draw(id::scheme_of(ctx_.pk), MessageType::Response, identity_);
  }

 private:
  Message draw(SchemeId scheme, MessageType type, bool identity) {
    Message msg{type, {}};
    for (ItemKind kind : id::message_layout(scheme, type)) {
      switch (kind) {
        case ItemKind::G1:
          msg.items.emplace_back(identity ? ctx_.suite.g1_identity() : ctx_.suite.random_g1(rng_));
          break;
        case ItemKind::G2: msg.items.emplace_back(ctx_.suite.random_g2(rng_)); break;
        case ItemKind::Zp: msg.items.emplace_back(ctx_.suite.random_scalar(rng_)); break;
        case ItemKind::Bits: msg.items.emplace_back(BitString{}); break;
      }
    }
    return msg;
  }

  AttackContext ctx_;
  bool identity_;
  Rng rng_;
};

void require_transparent(const GroupSuite& suite, const char* who) {
  if (suite.kind() != algebra::BackendKind::Transparent) {
    fail(Errc::InvalidArgument, std::string(who) + " reads discrete logs and needs the transparent backend");
  }
}

}  // namespace

id::SecretKey recover_secret(const GroupSuite& suite, const id::PublicKey& pk, Rng& rng) {
  require_transparent(suite, "key recovery");
  auto L = [&](const auto& x) { return transparent_log(suite, x); };
  switch (id::scheme_of(pk)) {
    case SchemeId::BLSID: return id::BlsidSecret{L(std::get<id::BlsidPublic>(pk).v)};
    case SchemeId::CDHID: return id::CdhidSecret{L(std::get<id::CdhidPublic>(pk).v)};
    case SchemeId::SDHID: {
      const auto& k = std::get<id::SdhidPublic>(pk);
      return id::SdhidSecret{L(k.u), L(k.v)};
    }
    case SchemeId::OWFID: {
      const auto& k = std::get<id::OwfidPublic>(pk);
      const Scalar s = suite.random_scalar(rng);
      const Scalar q = -(L(k.v) + L(k.y) * s) / L(k.P);
      return id::OwfidSecret{algebra::transparent_g1(q.value()), s};
    }
    case SchemeId::SCL: {
      const auto& k = std::get<id::SclPublic>(pk);
      return id::SclSecret{L(k.v) / L(k.g)};
    }
    case SchemeId::HLS: {
      const auto& k = std::get<id::HlsPublic>(pk);
      const Scalar a = L(k.R) / L(k.P);
      const Scalar b = L(k.S) / L(k.P);
      return id::HlsSecret{algebra::transparent_g1((L(k.P) * a * b).value())};
    }
  }
  fail(Errc::InvalidArgument, "unknown scheme");
}

KnowsKeyAttacker::KnowsKeyAttacker(double success, std::uint64_t queries) : success_(success), queries_(queries) {
  if (success < 0 || success > 1) fail(Errc::InvalidArgument, "success probability must lie in [0, 1]");
}

Bytes KnowsKeyAttacker::observe(const AttackContext& ctx, ProverPort& prover, Rng& coins) {
  std::set<std::uint64_t> used;
  for (std::uint64_t i = 0; i < queries_; ++i) {
    prover.open();
    const id::Item c = observation_challenge(ctx.suite, ctx.pk, coins, used);
    try {
      prover.respond({MessageType::Challenge, {c}});
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) throw;
    }
  }
  return u64_bytes(coins.next());
}

std::unique_ptr<CheatingProver> KnowsKeyAttacker::impersonate(const AttackContext& ctx, const Bytes& state,
                                                              Rng& coins) {
  const id::SecretKey sk = recover_secret(ctx.suite, ctx.pk, coins);
  return std::make_unique<KnowsKeyProver>(ctx, sk, get_be(state), success_, coins);
}

Bytes RandomResponder::observe(const AttackContext&, ProverPort&, Rng& coins) { return u64_bytes(coins.next()); }

std::unique_ptr<CheatingProver> RandomResponder::impersonate(const AttackContext& ctx, const Bytes&, Rng& coins) {
  return std::make_unique<RandomProver>(ctx, identity_, coins);
}

std::optional<G1Element> OmniscientOmCdh::solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                                                OmCdhOracles& oracles, Rng& coins) {
  require_transparent(suite, "the omniscient solver");
  for (std::uint64_t i = 0; i < queries_; ++i) oracles.cdh(suite.random_g1(coins));
  const Scalar a = transparent_log(suite, ga) / transparent_log(suite, g);
  return suite.g1_pow_uncounted(oracles.challenge(), a);
}

std::optional<G1Element> GuessingOmCdh::solve(const GroupSuite& suite, const G1Element&, const G1Element&,
                                              OmCdhOracles& oracles, Rng& coins) {
  for (std::uint64_t i = 0; i < queries_; ++i) oracles.cdh(suite.random_g1(coins));
  oracles.challenge();
  return suite.random_g1(coins);
}

std::optional<G1Element> LateQueryOmCdh::solve(const GroupSuite&, const G1Element&, const G1Element&,
                                               OmCdhOracles& oracles, Rng&) {
  const G1Element r = oracles.challenge();
  return oracles.cdh(r);
}

Inverter perfect_inverter(const GroupSuite& suite) {
  require_transparent(suite, "the perfect inverter");
  return [suite](const G1Element& g, const G2Element& x) {
    const Scalar h = transparent_log(suite, x) / transparent_log(suite, g);
    return algebra::transparent_g1(h.value());
  };
}

Inverter noisy_inverter(const GroupSuite& suite, double eps, std::uint64_t seed) {
  const Inverter exact = perfect_inverter(suite);
  auto rng = std::make_shared<Rng>(seed);
  return [suite, exact, eps, rng](const G1Element& g, const G2Element& x) {
    if (rng->bernoulli(eps)) return exact(g, x);
    return suite.random_g1(*rng);
  };
}

}  // namespace pairid::lab
