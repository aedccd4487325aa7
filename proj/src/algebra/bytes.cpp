#include "pairid/bytes.hpp"

#include <algorithm>

#include "pairid/error.hpp"

namespace pairid {

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) fail(Errc::MalformedEncoding, "odd-length hex string");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) fail(Errc::MalformedEncoding, "non-hex character");
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

void put_be(Bytes& out, std::uint64_t value, std::size_t width) {
  for (std::size_t i = width; i-- > 0;) {
    out.push_back(i < 8 ? static_cast<std::uint8_t>(value >> (8 * i)) : 0);
  }
}

std::uint64_t get_be(ByteView in) {
  std::uint64_t v = 0;
  for (auto b : in) {
    if (v >> 56) fail(Errc::MalformedEncoding, "integer does not fit in 64 bits");
    v = (v << 8) | b;
  }
  return v;
}

unsigned bit_length(std::uint64_t n) {
  unsigned bits = 0;
  while (n) {
    ++bits;
    n >>= 1;
  }
  return bits;
}

std::size_t scalar_width(std::uint64_t modulus) {
  return std::max<std::size_t>(2, (bit_length(modulus) + 7) / 8);
}

Bytes BitString::to_bytes() const {
  Bytes out;
  put_be(out, value, byte_size());
  return out;
}

BitString BitString::from_bytes(ByteView in, unsigned bits) {
  if (bits == 0 || bits > 63) fail(Errc::MalformedEncoding, "bit string length out of range");
  BitString s{0, bits};
  if (in.size() != s.byte_size()) fail(Errc::MalformedEncoding, "bit string has wrong byte length");
  s.value = get_be(in);
  if (s.value >> bits) fail(Errc::MalformedEncoding, "bit string has bits set above its length");
  return s;
}

}  // namespace pairid
