#include "pairid/sig/forgery.hpp"

#include <chrono>
#include <set>

#include "pairid/error.hpp"

namespace pairid::sig {

std::string sig_scheme_name(SigScheme scheme) { return scheme == SigScheme::Bls ? "bls" : "bb"; }

SigScheme parse_sig_scheme(const std::string& name) {
  if (name == "bls") return SigScheme::Bls;
  if (name == "bb") return SigScheme::Bb;
  fail(Errc::InvalidArgument, "unknown signature scheme '" + name + "' (bls or bb)");
}

bool verify_signed_message(SigScheme scheme, const GroupSuite& suite, const GroupHash& hash, const SigPublicKey& pk,
                           const SignedMessage& sm) {
  if (scheme == SigScheme::Bls) return bls_verify(suite, hash, pk.v, sm.message, sm.sigma);
  try {
    const Scalar m = suite.decode_scalar(sm.message);
    return bb_verify(suite, {pk.u, pk.v, pk.z}, m, {sm.sigma, sm.r});
  } catch (const Error&) {
    return false;
  }
}

namespace {

class GameOracles final : public SigningOracles {
 public:
  GameOracles(SigScheme scheme, const GroupSuite& suite, const GroupHash& hash, const ForgeryGameConfig& config,
              Scalar x, std::optional<BbSecretKey> bb, Rng& rng)
      : scheme_(scheme), suite_(suite), hash_(hash), config_(config), x_(x), bb_(bb), rng_(rng) {}

  SignedMessage sign(ByteView message) override {
    if (++sign_queries_ > config_.max_sign_queries) fail(Errc::BudgetExceeded, "signing budget exhausted");
    signed_.insert(Bytes(message.begin(), message.end()));
    if (scheme_ == SigScheme::Bls) {
      return {Bytes(message.begin(), message.end()), bls_sign(suite_, hash_, x_, message), suite_.scalar(0)};
    }
    const Scalar m = suite_.decode_scalar(message);
    const BbSignature s = bb_sign(suite_, *bb_, m, rng_);
    return {Bytes(message.begin(), message.end()), s.sigma, s.r};
  }

  G1Element hash(ByteView message) override {
    if (++hash_queries_ > config_.max_hash_queries) fail(Errc::BudgetExceeded, "hash budget exhausted");
    return hash_(suite_, message);
  }

  bool was_signed(const Bytes& message) const { return signed_.count(message) != 0; }
  std::uint64_t sign_queries() const { return sign_queries_; }
  std::uint64_t hash_queries() const { return hash_queries_; }

 private:
  SigScheme scheme_;
  const GroupSuite& suite_;
  const GroupHash& hash_;
  const ForgeryGameConfig& config_;
  Scalar x_;
  std::optional<BbSecretKey> bb_;
  Rng& rng_;
  std::set<Bytes> signed_;
  std::uint64_t sign_queries_ = 0;
  std::uint64_t hash_queries_ = 0;
};

}  // namespace

GameReport forgery_game(SigScheme scheme, Forger& forger, const GroupSuite& suite, const ForgeryGameConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const GroupSuite plain = suite.uncounted();
  const HashMode mode = config.hash_mode.value_or(default_hash_mode(suite.kind()));

  GameReport report;
  report.game = "forgery-" + sig_scheme_name(scheme);
  report.add_param("p", std::to_string(suite.p()));
  report.add_param("backend", algebra::backend_name(suite.kind()));
  report.add_param("q_S", std::to_string(config.max_sign_queries));
  report.add_param("q_H", std::to_string(config.max_hash_queries));
  report.add_param("hash", hash_mode_name(mode));
  report.counts = {{"sign_queries", 0}, {"hash_queries", 0}, {"budget_violations", 0},
                   {"malformed_queries", 0}, {"replayed_messages", 0}, {"invalid_outputs", 0},
                   {"conceded", 0}};

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    Rng game_rng(config.seed, 2 * t);
    Rng forger_rng(config.seed, 2 * t + 1);
    const GroupHash hash(mode, game_rng.next());

    SigPublicKey pk;
    Scalar x = plain.scalar(0);
    std::optional<BbSecretKey> bb;
    if (scheme == SigScheme::Bls) {
      const auto kp = bls_keygen(plain, game_rng);
      x = kp.x;
      pk.v = kp.v;
    } else {
      const auto kp = bb_keygen(plain, game_rng);
      bb = kp.sk;
      pk = {kp.pk.u, kp.pk.v, kp.pk.z};
    }

    GameOracles oracles(scheme, plain, hash, config, x, bb, game_rng);
    std::optional<SignedMessage> out;
    bool over_budget = false;
    bool bad_query = false;
    try {
      out = forger.forge(plain, scheme, pk, oracles, forger_rng);
    } catch (const Error& e) {
      // A malformed oracle query (e.g. a BB message outside Z_p*) forfeits the trial.
      (e.code() == Errc::BudgetExceeded ? over_budget : bad_query) = true;
    }
    report.counts["sign_queries"] += std::min(oracles.sign_queries(), config.max_sign_queries + 1);
    report.counts["hash_queries"] += std::min(oracles.hash_queries(), config.max_hash_queries + 1);

    if (over_budget) {
      ++report.counts["budget_violations"];
    } else if (bad_query) {
      ++report.counts["malformed_queries"];
    } else if (!out) {
      ++report.counts["conceded"];
    } else if (oracles.was_signed(out->message)) {
      ++report.counts["replayed_messages"];
    } else if (!verify_signed_message(scheme, plain, hash, pk, *out)) {
      ++report.counts["invalid_outputs"];
    } else {
      ++report.wins;
    }
    ++report.trials;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pairid::sig
