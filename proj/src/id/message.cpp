#include "pairid/id/message.hpp"

namespace pairid::id {

std::string message_type_name(MessageType type) {
  switch (type) {
    case MessageType::Commitment: return "commitment";
    case MessageType::Challenge: return "challenge";
    case MessageType::Response: return "response";
  }
  return "?";
}

std::vector<ItemKind> message_layout(SchemeId scheme, MessageType type) {
  using K = ItemKind;
  switch (type) {
    case MessageType::Commitment:
      switch (scheme) {
        case SchemeId::OWFID:
        case SchemeId::HLS: return {K::G2};
        case SchemeId::SCL: return {K::G1};
        default: return {};
      }
    case MessageType::Challenge:
      switch (scheme) {
        case SchemeId::BLSID: return {K::Bits};
        case SchemeId::CDHID: return {K::G1};
        default: return {K::Zp};
      }
    case MessageType::Response:
      switch (scheme) {
        case SchemeId::SDHID:
        case SchemeId::OWFID: return {K::G1, K::Zp};
        default: return {K::G1};
      }
  }
  return {};
}

Bytes encode_payload(const GroupSuite& suite, const Message& msg) {
  Bytes out;
  for (const auto& item : msg.items) {
    const Bytes b = encode_item(suite, item);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Message decode_payload(const GroupSuite& suite, SchemeId scheme, MessageType type, ByteView payload, unsigned bits) {
  const auto layout = message_layout(scheme, type);
  std::size_t total = 0;
  for (auto k : layout) total += item_size(suite, k, bits);
  if (payload.size() != total) {
    fail(Errc::LengthMismatch, scheme_name(scheme) + " " + message_type_name(type) + " payload has " +
                                   std::to_string(payload.size()) + " bytes, expected " + std::to_string(total));
  }
  Message msg{type, {}};
  std::size_t off = 0;
  for (auto k : layout) {
    const std::size_t n = item_size(suite, k, bits);
    msg.items.push_back(decode_item(suite, k, payload.subspan(off, n), bits));
    off += n;
  }
  return msg;
}

void check_layout(SchemeId scheme, const Message& msg) {
  const auto layout = message_layout(scheme, msg.type);
  bool ok = layout.size() == msg.items.size();
  for (std::size_t i = 0; ok && i < layout.size(); ++i) ok = item_kind(msg.items[i]) == layout[i];
  if (!ok) fail(Errc::ProtocolViolation, scheme_name(scheme) + " " + message_type_name(msg.type) + " has the wrong shape");
}

void tally(algebra::Bandwidth& bw, const GroupSuite& suite, const Message& msg) {
  for (const auto& item : msg.items) {
    const std::uint64_t size = encode_item(suite, item).size();
    switch (item_kind(item)) {
      case ItemKind::G1: ++bw.g1; bw.bytes_g1 += size; break;
      case ItemKind::G2: ++bw.g2; bw.bytes_g2 += size; break;
      case ItemKind::Zp: ++bw.zp; bw.bytes_zp += size; break;
      case ItemKind::Bits: ++bw.bits; bw.bytes_bits += size; break;
    }
  }
}

}  // namespace pairid::id
