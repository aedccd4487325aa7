#include "pairid/session/wire.hpp"

namespace pairid::session {

std::string frame_tag_name(FrameTag tag) {
  switch (tag) {
    case FrameTag::Hello: return "hello";
    case FrameTag::Commitment: return "commitment";
    case FrameTag::Challenge: return "challenge";
    case FrameTag::Response: return "response";
    case FrameTag::Decision: return "decision";
    case FrameTag::Error: return "error";
  }
  return "?";
}

bool is_known_tag(std::uint8_t tag) { return tag >= 0x01 && tag <= 0x06; }

Bytes frame_encode(const Frame& frame) {
  if (frame.payload.size() > kMaxPayload) fail(Errc::LengthMismatch, "frame payload too large");
  Bytes out;
  out.reserve(frame.payload.size() + 5);
  put_be(out, frame.payload.size() + 1, 4);
  out.push_back(static_cast<std::uint8_t>(frame.tag));
  out.insert(out.end(), frame.payload.begin(), frame.payload.end());
  return out;
}

Frame frame_decode(ByteView in) {
  if (in.size() < 4) fail(Errc::ShortFrame, "frame shorter than its length field");
  const std::uint64_t len = get_be(in.first(4));
  if (len == 0) fail(Errc::LengthMismatch, "frame length 0 leaves no room for the tag");
  if (len > kMaxPayload + 1) fail(Errc::LengthMismatch, "frame length " + std::to_string(len) + " too large");
  if (in.size() < 4 + len) {
    fail(Errc::ShortFrame, "frame declares " + std::to_string(len) + " bytes, " + std::to_string(in.size() - 4) +
                               " present");
  }
  if (in.size() > 4 + len) fail(Errc::LengthMismatch, "bytes trail the frame");
  const std::uint8_t tag = in[4];
  if (!is_known_tag(tag)) fail(Errc::UnknownTag, "unknown frame tag " + std::to_string(tag));
  return {static_cast<FrameTag>(tag), Bytes(in.begin() + 5, in.end())};
}

Frame message_frame(const algebra::GroupSuite& suite, const id::Message& msg) {
  return {static_cast<FrameTag>(msg.type), id::encode_payload(suite, msg)};
}

id::Message frame_message(const algebra::GroupSuite& suite, id::SchemeId scheme, id::MessageType type,
                          const Frame& frame, unsigned bits) {
  if (frame.tag != static_cast<FrameTag>(type)) {
    fail(Errc::ProtocolViolation, "expected a " + id::message_type_name(type) + " frame, got " +
                                      frame_tag_name(frame.tag));
  }
  return id::decode_payload(suite, scheme, type, frame.payload, bits);
}

Hello make_hello(const algebra::GroupSuite& suite, id::SchemeId scheme, unsigned n) {
  return {scheme, suite.kind(), suite.p(), scheme == id::SchemeId::BLSID ? n : 0u,
          static_cast<unsigned>(suite.scalar_size())};
}

std::string describe(const Hello& h) {
  return id::scheme_name(h.scheme) + " on " + algebra::backend_name(h.backend) + " p=" + std::to_string(h.p) +
         " n=" + std::to_string(h.n) + " width=" + std::to_string(h.width);
}

Bytes encode_hello(const Hello& h) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(h.scheme));
  out.push_back(static_cast<std::uint8_t>(h.backend));
  put_be(out, h.p, 8);
  out.push_back(static_cast<std::uint8_t>(h.n));
  out.push_back(static_cast<std::uint8_t>(h.width));
  return out;
}

Hello decode_hello(ByteView payload) {
  if (payload.size() != 12) fail(Errc::LengthMismatch, "hello payload must be 12 bytes");
  if (payload[0] >= id::kAllSchemes.size()) fail(Errc::MalformedEncoding, "hello names an unknown scheme");
  if (payload[1] > static_cast<std::uint8_t>(algebra::BackendKind::TateCurve)) {
    fail(Errc::MalformedEncoding, "hello names an unknown backend");
  }
  return {static_cast<id::SchemeId>(payload[0]), static_cast<algebra::BackendKind>(payload[1]),
          get_be(payload.subspan(2, 8)), payload[10], payload[11]};
}

Frame decision_frame(bool accept) { return {FrameTag::Decision, {static_cast<std::uint8_t>(accept ? 1 : 0)}}; }

bool decode_decision(ByteView payload) {
  if (payload.size() != 1) fail(Errc::LengthMismatch, "decision payload must be 1 byte");
  if (payload[0] > 1) fail(Errc::MalformedEncoding, "decision byte must be 0 or 1");
  return payload[0] == 1;
}

Frame error_frame(const std::string& what) { return {FrameTag::Error, Bytes(what.begin(), what.end())}; }

}  // namespace pairid::session
