#include "pairid/lab/mitm.hpp"

namespace pairid::lab {

MitmReport mitm_relay_demo(const algebra::GroupSuite& suite, const id::KeyPair& kp, std::uint64_t seed,
                           std::optional<std::size_t> flip_bit) {
  using id::MessageType;
  const unsigned bits = id::challenge_bits(kp.pk);
  MitmReport report;
  report.honest = id::run_session(kp, suite, seed);

  id::Prover prover(suite, kp, id::prover_rng(seed));
  id::Verifier verifier(suite, kp.scheme, kp.pk, id::verifier_rng(seed));
  auto relay = [&](const id::Message& msg, bool tamper) {
    Bytes payload = id::encode_payload(suite, msg);
    if (tamper && flip_bit) {
      const std::size_t bit = *flip_bit % (8 * payload.size());
      payload[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    }
    return id::decode_payload(suite, kp.scheme, msg.type, payload, bits);
  };

  id::Transcript& t = report.relayed;
  t.scheme = kp.scheme;
  t.seed = seed;
  try {
    if (id::has_commitment(kp.scheme)) {
      t.commitment = relay(prover.commit(), false);
      verifier.receive_commitment(*t.commitment);
    }
    t.challenge = relay(verifier.challenge(), false);
    t.response = relay(prover.respond(t.challenge), true);
    t.accepted = verifier.receive_response(*t.response);
  } catch (const Error& e) {
    t.accepted = false;
    t.abort_reason = e.what();
  }

  report.identical = t.commitment == report.honest.commitment && t.challenge == report.honest.challenge &&
                     t.response == report.honest.response && t.accepted == report.honest.accepted;
  report.note = flip_bit ? "tampered response: the verifier's check is what stops it"
                         : "a faithful relay is indistinguishable from the prover itself; concurrent "
                           "relaying lies outside the sequential attack model";
  return report;
}

}  // namespace pairid::lab
