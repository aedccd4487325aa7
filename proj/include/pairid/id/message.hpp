#pragma once

#include <cstdint>
#include <vector>

#include "pairid/id/scheme.hpp"

namespace pairid::id {

/// Values double as the wire tags of the framed transport.
enum class MessageType : std::uint8_t { Commitment = 0x02, Challenge = 0x03, Response = 0x04 };

std::string message_type_name(MessageType type);

struct Message {
  MessageType type;
  std::vector<Item> items;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Item kinds of each message, in wire order. Empty for the commitment of a
/// two-move scheme.
///   blsid  -          | M: bits | sigma: G1
///   cdhid  -          | h: G1   | sigma: G1
///   sdhid  -          | m: Zp   | sigma: G1, r: Zp
///   owfid  x: G2      | m: Zp   | T: G1, a: Zp
///   scl    tau: G1    | r: Zp   | sigma: G1
///   hls    w: G2      | c: Zp   | sigma: G1
std::vector<ItemKind> message_layout(SchemeId scheme, MessageType type);

/// Concatenated fixed-width encodings of the items.
Bytes encode_payload(const GroupSuite& suite, const Message& msg);
/// Throws LengthMismatch when the payload size disagrees with the layout,
/// or a decode error for a malformed element. `bits` is BLSID's n.
Message decode_payload(const GroupSuite& suite, SchemeId scheme, MessageType type, ByteView payload,
                       unsigned bits = 0);

/// Throws ProtocolViolation unless the item kinds match the layout.
void check_layout(SchemeId scheme, const Message& msg);

/// Adds the message's elements to the bandwidth tally.
void tally(algebra::Bandwidth& bw, const GroupSuite& suite, const Message& msg);

}  // namespace pairid::id
