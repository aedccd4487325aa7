#include "pairid/session/endpoint.hpp"

#include <exception>
#include <thread>

namespace pairid::session {

namespace {

using id::MessageType;

/// Sends an error frame to the peer, ignoring a dead transport, then throws.
[[noreturn]] void abort_session(Transport& t, Errc code, const std::string& what) {
  try {
    t.send(error_frame(what));
  } catch (const Error&) {
  }
  fail(code, what);
}

Frame expect(Transport& t, FrameTag tag) {
  Frame f = t.receive();
  if (f.tag == FrameTag::Error) {
    fail(Errc::ProtocolViolation, "peer aborted: " + std::string(f.payload.begin(), f.payload.end()));
  }
  if (f.tag != tag) {
    abort_session(t, Errc::ProtocolViolation,
                  "expected a " + frame_tag_name(tag) + " frame, got " + frame_tag_name(f.tag));
  }
  return f;
}

void exchange_hello(Transport& t, const Hello& mine) {
  t.send({FrameTag::Hello, encode_hello(mine)});
  const Frame f = expect(t, FrameTag::Hello);
  Hello theirs;
  try {
    theirs = decode_hello(f.payload);
  } catch (const Error& e) {
    abort_session(t, Errc::ProtocolViolation, std::string("bad hello: ") + e.what());
  }
  if (!(theirs == mine)) {
    abort_session(t, Errc::ProtocolViolation, "hello mismatch: local " + describe(mine) + ", peer " + describe(theirs));
  }
}

id::Message decode_or_abort(Transport& t, const algebra::GroupSuite& suite, id::SchemeId scheme, MessageType type,
                            const Frame& f, unsigned bits) {
  try {
    return frame_message(suite, scheme, type, f, bits);
  } catch (const Error& e) {
    abort_session(t, Errc::ProtocolViolation, std::string("undecodable ") + id::message_type_name(type) + ": " + e.what());
  }
}

}  // namespace

SessionResult serve_prover(const algebra::GroupSuite& suite, const id::KeyPair& kp, id::SchemeId scheme,
                           Transport& transport, std::uint64_t seed) {
  SessionResult out;
  const unsigned bits = id::challenge_bits(kp.pk);
  out.hello = make_hello(suite, scheme, bits);
  out.transcript.scheme = scheme;
  out.transcript.seed = seed;
  exchange_hello(transport, out.hello);
  if (kp.scheme != scheme) abort_session(transport, Errc::KeyMismatch, "prover key is not a " + id::scheme_name(scheme) + " key");

  id::Prover prover(suite, kp, id::prover_rng(seed));
  if (id::has_commitment(scheme)) {
    out.transcript.commitment = prover.commit();
    transport.send(message_frame(suite, *out.transcript.commitment));
  }
  out.transcript.challenge =
      decode_or_abort(transport, suite, scheme, MessageType::Challenge, expect(transport, FrameTag::Challenge), bits);
  try {
    out.transcript.response = prover.respond(out.transcript.challenge);
  } catch (const Error& e) {
    if (e.code() == Errc::ProtocolViolation) abort_session(transport, e.code(), e.what());
    out.transcript.abort_reason = e.what();
    transport.send(error_frame(e.what()));
    out.decision = false;
    return out;
  }
  transport.send(message_frame(suite, *out.transcript.response));
  const Frame d = expect(transport, FrameTag::Decision);
  try {
    out.decision = decode_decision(d.payload);
  } catch (const Error& e) {
    fail(Errc::ProtocolViolation, std::string("bad decision frame: ") + e.what());
  }
  out.transcript.accepted = *out.decision;
  return out;
}

SessionResult run_verifier(const algebra::GroupSuite& suite, const id::PublicKey& pk, id::SchemeId scheme,
                           Transport& transport, std::uint64_t seed) {
  SessionResult out;
  const unsigned bits = id::challenge_bits(pk);
  out.hello = make_hello(suite, scheme, bits);
  out.transcript.scheme = scheme;
  out.transcript.seed = seed;
  exchange_hello(transport, out.hello);
  if (id::scheme_of(pk) != scheme) {
    abort_session(transport, Errc::KeyMismatch, "verifier key is not a " + id::scheme_name(scheme) + " key");
  }

  id::Verifier verifier(suite, scheme, pk, id::verifier_rng(seed));
  try {
    if (id::has_commitment(scheme)) {
      out.transcript.commitment = decode_or_abort(transport, suite, scheme, MessageType::Commitment,
                                                  expect(transport, FrameTag::Commitment), bits);
      verifier.receive_commitment(*out.transcript.commitment);
    }
    out.transcript.challenge = verifier.challenge();
    transport.send(message_frame(suite, out.transcript.challenge));

    const Frame f = transport.receive();
    if (f.tag == FrameTag::Error) {
      out.transcript.abort_reason = "prover aborted: " + std::string(f.payload.begin(), f.payload.end());
      out.decision = false;
      return out;
    }
    if (f.tag != FrameTag::Response) {
      abort_session(transport, Errc::ProtocolViolation, "expected a response frame, got " + frame_tag_name(f.tag));
    }
    out.transcript.response = decode_or_abort(transport, suite, scheme, MessageType::Response, f, bits);
    out.decision = verifier.receive_response(*out.transcript.response);
  } catch (const Error& e) {
    // Verifier-side violations (wrong layout, ...) already decided reject.
    if (e.code() != Errc::ProtocolViolation || !verifier.decision()) throw;
    abort_session(transport, Errc::ProtocolViolation, e.what());
  }
  out.transcript.accepted = *out.decision;
  transport.send(decision_frame(*out.decision));
  return out;
}

void require_accept(const SessionResult& result) {
  if (!result.decision || !*result.decision) {
    fail(Errc::VerifyReject, result.transcript.abort_reason.empty() ? "verifier rejected"
                                                                    : "verifier rejected: " + result.transcript.abort_reason);
  }
}

LoopbackRun run_loopback(const algebra::GroupSuite& suite, const id::KeyPair& prover_key,
                         const id::PublicKey& verifier_key, std::uint64_t seed) {
  auto [a, b] = make_loopback();
  LoopbackRun run;
  std::exception_ptr prover_error;
  std::thread prover([&, ep = a.get()] {
    try {
      run.prover = serve_prover(suite, prover_key, prover_key.scheme, *ep, seed);
    } catch (...) {
      prover_error = std::current_exception();
    }
  });
  std::exception_ptr verifier_error;
  try {
    run.verifier = run_verifier(suite, verifier_key, id::scheme_of(verifier_key), *b, seed);
  } catch (...) {
    verifier_error = std::current_exception();
  }
  prover.join();
  run.prover_bytes = a->sent_bytes();
  run.verifier_bytes = b->sent_bytes();
  if (verifier_error) std::rethrow_exception(verifier_error);
  if (prover_error) std::rethrow_exception(prover_error);
  return run;
}

std::pair<Bytes, Bytes> expected_wire(const algebra::GroupSuite& suite, const id::KeyPair& kp, std::uint64_t seed) {
  const id::Transcript t = id::run_session(kp, suite.uncounted(), seed);
  const Frame hello{FrameTag::Hello, encode_hello(make_hello(suite, kp.scheme, id::challenge_bits(kp.pk)))};
  Bytes prover = frame_encode(hello);
  Bytes verifier = frame_encode(hello);
  auto append = [](Bytes& out, const Frame& f) {
    const Bytes b = frame_encode(f);
    out.insert(out.end(), b.begin(), b.end());
  };
  if (t.commitment) append(prover, message_frame(suite, *t.commitment));
  append(verifier, message_frame(suite, t.challenge));
  if (t.response) {
    append(prover, message_frame(suite, *t.response));
    append(verifier, decision_frame(t.accepted));
  } else {
    append(prover, error_frame(t.abort_reason));
  }
  return {prover, verifier};
}

}  // namespace pairid::session
