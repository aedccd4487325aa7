#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pairid {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView bytes);
/// Throws Error(MalformedEncoding) on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

/// Fixed-width big-endian encoding; value must fit in `width` bytes.
void put_be(Bytes& out, std::uint64_t value, std::size_t width);
std::uint64_t get_be(ByteView in);

/// Number of significant bits of n (0 for n = 0).
unsigned bit_length(std::uint64_t n);

/// Byte width used for scalars and transparent-backend elements mod p.
/// At least two bytes so every desk-scale modulus shares one framing width.
std::size_t scalar_width(std::uint64_t modulus);

/// An n-bit string (n <= 63) held as an integer below 2^n. On the wire it
/// takes ceil(n/8) big-endian bytes.
struct BitString {
  std::uint64_t value = 0;
  unsigned bits = 0;

  std::size_t byte_size() const { return (bits + 7) / 8; }
  Bytes to_bytes() const;
  /// Throws MalformedEncoding on a wrong length or a value >= 2^bits.
  static BitString from_bytes(ByteView in, unsigned bits);

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;
};

}  // namespace pairid
