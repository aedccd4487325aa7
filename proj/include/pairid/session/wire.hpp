#pragma once

// Framing: 4-byte big-endian length (payload size + 1), a 1-byte tag, then
// the payload.

#include <cstdint>
#include <string>

#include "pairid/bytes.hpp"
#include "pairid/id/message.hpp"

namespace pairid::session {

enum class FrameTag : std::uint8_t {
  Hello = 0x01,
  Commitment = 0x02,
  Challenge = 0x03,
  Response = 0x04,
  Decision = 0x05,
  Error = 0x06,
};

std::string frame_tag_name(FrameTag tag);
bool is_known_tag(std::uint8_t tag);

struct Frame {
  FrameTag tag;
  Bytes payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Frames larger than this are refused on both ends.
inline constexpr std::size_t kMaxPayload = 1 << 20;

Bytes frame_encode(const Frame& frame);
/// Decodes exactly one complete frame. Throws ShortFrame when `in` ends
/// before the frame does, LengthMismatch when bytes trail it or the length
/// field is 0 or too large, UnknownTag for tags outside 0x01..0x06.
Frame frame_decode(ByteView in);

Frame message_frame(const algebra::GroupSuite& suite, const id::Message& msg);
/// Throws ProtocolViolation when the tag is not the expected message type.
id::Message frame_message(const algebra::GroupSuite& suite, id::SchemeId scheme, id::MessageType type,
                          const Frame& frame, unsigned bits);

/// Session parameters both sides must agree on before any protocol message.
/// Payload: scheme, backend, p (8 bytes), n, element width.
struct Hello {
  id::SchemeId scheme;
  algebra::BackendKind backend;
  std::uint64_t p = 0;
  unsigned n = 0;  // BLSID challenge bits, 0 otherwise
  unsigned width = 0;  // scalar encoding width in bytes

  friend bool operator==(const Hello&, const Hello&) = default;
};

Hello make_hello(const algebra::GroupSuite& suite, id::SchemeId scheme, unsigned n);
std::string describe(const Hello& hello);
Bytes encode_hello(const Hello& hello);
/// Throws LengthMismatch or MalformedEncoding.
Hello decode_hello(ByteView payload);

Frame decision_frame(bool accept);
/// Throws LengthMismatch or MalformedEncoding unless the payload is one 0/1 byte.
bool decode_decision(ByteView payload);

Frame error_frame(const std::string& what);

}  // namespace pairid::session
