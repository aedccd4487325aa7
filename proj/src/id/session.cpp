#include "pairid/id/session.hpp"

namespace pairid::id {

namespace {

template <class T>
const T& item(const Message& msg, std::size_t i) {
  return std::get<T>(msg.items.at(i));
}

[[noreturn]] void prover_violation(const std::string& what) { fail(Errc::ProtocolViolation, "prover: " + what); }

}  // namespace

unsigned challenge_bits(const PublicKey& pk) {
  if (const auto* b = std::get_if<BlsidPublic>(&pk)) return b->n;
  return 0;
}

Rng prover_rng(std::uint64_t seed) { return Rng(seed, 1); }
Rng verifier_rng(std::uint64_t seed) { return Rng(seed, 2); }

Prover::Prover(const GroupSuite& suite, KeyPair kp, Rng rng) : suite_(suite), kp_(std::move(kp)), rng_(rng) {
  if (scheme_of(kp_.pk) != kp_.scheme || scheme_of(kp_.sk) != kp_.scheme) {
    fail(Errc::KeyMismatch, "key pair does not belong to " + scheme_name(kp_.scheme));
  }
}

Message Prover::commit() {
  if (!has_commitment(kp_.scheme)) prover_violation(scheme_name(kp_.scheme) + " has no commitment");
  if (state_ != State::Fresh) prover_violation("commitment already sent");
  state_ = State::Committed;
  switch (kp_.scheme) {
    case SchemeId::OWFID: {
      const auto c = owfid_commit(suite_, std::get<OwfidPublic>(kp_.pk), rng_);
      owfid_ = c.witness;
      return {MessageType::Commitment, {c.x}};
    }
    case SchemeId::SCL: {
      const auto c = scl_commit(suite_, std::get<SclPublic>(kp_.pk), rng_);
      nonce_ = c.w;
      return {MessageType::Commitment, {c.tau}};
    }
    case SchemeId::HLS: {
      const auto c = hls_commit(suite_, std::get<HlsPublic>(kp_.pk), rng_);
      nonce_ = c.r;
      return {MessageType::Commitment, {c.w}};
    }
    default: prover_violation("unexpected commitment");
  }
}

Message Prover::respond(const Message& ch) {
  if (ch.type != MessageType::Challenge) prover_violation("expected a challenge, got " + message_type_name(ch.type));
  if (state_ == State::Done) prover_violation("duplicate challenge");
  if (has_commitment(kp_.scheme) && state_ != State::Committed) prover_violation("challenge before commitment");
  check_layout(kp_.scheme, ch);
  state_ = State::Done;

  auto nonzero = [&](const Scalar& s) {
    if (s.value() == 0) prover_violation("scalar challenge outside Z_p*");
    return s;
  };
  switch (kp_.scheme) {
    case SchemeId::BLSID:
      return {MessageType::Response, {blsid_respond(suite_, std::get<BlsidPublic>(kp_.pk),
                                                    std::get<BlsidSecret>(kp_.sk), item<BitString>(ch, 0))}};
    case SchemeId::CDHID:
      return {MessageType::Response, {cdhid_respond(suite_, std::get<CdhidSecret>(kp_.sk), item<G1Element>(ch, 0))}};
    case SchemeId::SDHID: {
      const auto r = sdhid_respond(suite_, std::get<SdhidSecret>(kp_.sk), nonzero(item<Scalar>(ch, 0)), rng_);
      redraws_ += r.redraws;
      return {MessageType::Response, {r.sigma, r.r}};
    }
    case SchemeId::OWFID: {
      const auto r = owfid_respond(suite_, std::get<OwfidSecret>(kp_.sk), owfid_, nonzero(item<Scalar>(ch, 0)));
      return {MessageType::Response, {r.T, r.a}};
    }
    case SchemeId::SCL:
      return {MessageType::Response, {scl_respond(suite_, std::get<SclPublic>(kp_.pk), std::get<SclSecret>(kp_.sk),
                                                  nonce_, nonzero(item<Scalar>(ch, 0)))}};
    case SchemeId::HLS:
      return {MessageType::Response, {hls_respond(suite_, std::get<HlsPublic>(kp_.pk), std::get<HlsSecret>(kp_.sk),
                                                  nonce_, nonzero(item<Scalar>(ch, 0)))}};
  }
  prover_violation("unknown scheme");
}

Verifier::Verifier(const GroupSuite& suite, SchemeId scheme, PublicKey pk, Rng rng)
    : suite_(suite), scheme_(scheme), pk_(std::move(pk)), rng_(rng) {
  if (scheme_of(pk_) != scheme_) fail(Errc::KeyMismatch, "public key does not belong to " + scheme_name(scheme_));
}

void Verifier::violate(const std::string& what) {
  state_ = State::Done;
  decision_ = false;
  fail(Errc::ProtocolViolation, "verifier: " + what);
}

void Verifier::require(State expected, const char* what) {
  if (state_ != expected) violate(std::string("out-of-order or duplicate ") + what);
}

void Verifier::receive_commitment(const Message& commitment) {
  if (commitment.type != MessageType::Commitment) violate("expected a commitment");
  if (!has_commitment(scheme_)) violate(scheme_name(scheme_) + " has no commitment");
  require(State::Fresh, "commitment");
  try {
    check_layout(scheme_, commitment);
  } catch (const Error& e) {
    violate(e.what());
  }
  commitment_ = commitment;
  state_ = State::Committed;
}

Message Verifier::challenge() {
  require(has_commitment(scheme_) ? State::Committed : State::Fresh, "challenge");
  switch (scheme_) {
    case SchemeId::BLSID: {
      const unsigned n = std::get<BlsidPublic>(pk_).n;
      return challenge_with(BitString{rng_.below(1ULL << n), n});
    }
    case SchemeId::CDHID: return challenge_with(suite_.random_g1_nonidentity(rng_));
    case SchemeId::SCL: {
      const auto c = scl_challenge(suite_, std::get<SclPublic>(pk_), item<G1Element>(*commitment_, 0), rng_);
      redraws_ += c.redraws;
      scl_vr_ = c.vr;
      return challenge_with(c.r);
    }
    default: return challenge_with(suite_.random_nonzero_scalar(rng_));
  }
}

Message Verifier::challenge_with(const Item& value) {
  require(has_commitment(scheme_) ? State::Committed : State::Fresh, "challenge");
  Message msg{MessageType::Challenge, {value}};
  try {
    check_layout(scheme_, msg);
  } catch (const Error& e) {
    violate(e.what());
  }
  if (const auto* s = std::get_if<Scalar>(&value); s && s->value() == 0) violate("scalar challenge outside Z_p*");
  if (const auto* h = std::get_if<G1Element>(&value); h && *h == suite_.g1_identity()) {
    violate("identity group challenge");
  }
  if (const auto* m = std::get_if<BitString>(&value); m && m->bits != std::get<BlsidPublic>(pk_).n) {
    violate("challenge length differs from n");
  }
  if (scheme_ == SchemeId::SCL && !scl_vr_) scl_vr_ = suite_.g1_exp(std::get<SclPublic>(pk_).v, std::get<Scalar>(value));
  challenge_ = msg;
  state_ = State::Challenged;
  return msg;
}

bool Verifier::receive_response(const Message& response) {
  if (response.type != MessageType::Response) violate("expected a response, got " + message_type_name(response.type));
  require(State::Challenged, "response");
  try {
    check_layout(scheme_, response);
  } catch (const Error& e) {
    violate(e.what());
  }
  state_ = State::Done;
  if (scheme_ == SchemeId::SCL) {
    decision_ = scl_verify_prepared(suite_, std::get<SclPublic>(pk_), item<G1Element>(*commitment_, 0), *scl_vr_,
                                    item<G1Element>(response, 0));
  } else {
    decision_ = check_messages(suite_, pk_, commitment_, *challenge_, response);
  }
  return *decision_;
}

bool check_messages(const GroupSuite& suite, const PublicKey& pk, const std::optional<Message>& commitment,
                    const Message& ch, const Message& resp) {
  const SchemeId scheme = scheme_of(pk);
  if (has_commitment(scheme)) {
    if (!commitment) return false;
    check_layout(scheme, *commitment);
  }
  check_layout(scheme, ch);
  check_layout(scheme, resp);
  switch (scheme) {
    case SchemeId::BLSID:
      return blsid_verify(suite, std::get<BlsidPublic>(pk), item<BitString>(ch, 0), item<G1Element>(resp, 0));
    case SchemeId::CDHID:
      return cdhid_verify(suite, std::get<CdhidPublic>(pk), item<G1Element>(ch, 0), item<G1Element>(resp, 0));
    case SchemeId::SDHID:
      return sdhid_verify(suite, std::get<SdhidPublic>(pk), item<Scalar>(ch, 0), item<G1Element>(resp, 0),
                          item<Scalar>(resp, 1));
    case SchemeId::OWFID:
      return owfid_verify(suite, std::get<OwfidPublic>(pk), item<G2Element>(*commitment, 0), item<Scalar>(ch, 0),
                          item<G1Element>(resp, 0), item<Scalar>(resp, 1));
    case SchemeId::SCL:
      return scl_verify(suite, std::get<SclPublic>(pk), item<G1Element>(*commitment, 0), item<Scalar>(ch, 0),
                        item<G1Element>(resp, 0));
    case SchemeId::HLS:
      return hls_verify(suite, std::get<HlsPublic>(pk), item<G2Element>(*commitment, 0), item<Scalar>(ch, 0),
                        item<G1Element>(resp, 0));
  }
  return false;
}

Transcript run_session(const KeyPair& kp, const GroupSuite& suite, std::uint64_t seed) {
  algebra::CostCounter costs;
  Prover prover(suite.counted(costs, algebra::Role::Prover), kp, prover_rng(seed));
  Verifier verifier(suite.counted(costs, algebra::Role::Verifier), kp.scheme, kp.pk, verifier_rng(seed));

  Transcript t;
  t.scheme = kp.scheme;
  t.seed = seed;
  if (has_commitment(kp.scheme)) {
    t.commitment = prover.commit();
    tally(costs.bandwidth, suite, *t.commitment);
    verifier.receive_commitment(*t.commitment);
  }
  t.challenge = verifier.challenge();
  tally(costs.bandwidth, suite, t.challenge);
  try {
    t.response = prover.respond(t.challenge);
  } catch (const Error& e) {
    t.abort_reason = e.what();
  }
  if (t.response) {
    tally(costs.bandwidth, suite, *t.response);
    t.accepted = verifier.receive_response(*t.response);
  }
  t.costs = costs;
  t.redraws = prover.redraws() + verifier.redraws();
  return t;
}

bool replay(const Transcript& t, const GroupSuite& suite, const PublicKey& pk) {
  if (!t.response) return false;
  return check_messages(suite.uncounted(), pk, t.commitment, t.challenge, *t.response);
}

Record transcript_record(const GroupSuite& suite, const Transcript& t) {
  Record r;
  r.set("kind", "transcript");
  r.set("scheme", scheme_name(t.scheme));
  r.set("seed", std::to_string(t.seed));
  if (t.commitment) r.set("commitment", to_hex(encode_payload(suite, *t.commitment)));
  r.set("challenge", to_hex(encode_payload(suite, t.challenge)));
  if (t.response) r.set("response", to_hex(encode_payload(suite, *t.response)));
  if (!t.abort_reason.empty()) r.set("abort", t.abort_reason);
  r.set("decision", t.accepted ? "accept" : "reject");
  return r;
}

Transcript load_transcript(const Record& r, const GroupSuite& suite, const PublicKey& pk) {
  Transcript t;
  t.scheme = parse_scheme(r.get("scheme"));
  if (t.scheme != scheme_of(pk)) fail(Errc::KeyMismatch, "transcript and key are for different schemes");
  t.seed = r.get_u64("seed");
  const unsigned bits = challenge_bits(pk);
  if (auto c = r.find("commitment")) {
    t.commitment = decode_payload(suite, t.scheme, MessageType::Commitment, from_hex(*c), bits);
  }
  t.challenge = decode_payload(suite, t.scheme, MessageType::Challenge, from_hex(r.get("challenge")), bits);
  if (auto c = r.find("response")) t.response = decode_payload(suite, t.scheme, MessageType::Response, from_hex(*c), bits);
  t.abort_reason = r.find("abort").value_or("");
  const std::string& d = r.get("decision");
  if (d != "accept" && d != "reject") fail(Errc::BadRecord, "decision must be accept or reject");
  t.accepted = d == "accept";
  return t;
}

}  // namespace pairid::id
