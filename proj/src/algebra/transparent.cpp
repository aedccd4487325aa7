#include "pairid/algebra/transparent.hpp"

#include "pairid/error.hpp"

namespace pairid::algebra {

TransparentBackend::TransparentBackend(std::uint64_t p) : p_(p) {
  if (p < 5 || !is_prime(p)) fail(Errc::InvalidArgument, "transparent suite needs a prime p >= 5, got " + std::to_string(p));
  if (p >= (1ULL << 62)) fail(Errc::InvalidArgument, "modulus too large");
}

G1Element TransparentBackend::g1_mul(const G1Element& x, const G1Element& y) const {
  return {(x.a + y.a) % p_, 0, false};
}

G1Element TransparentBackend::g1_inv(const G1Element& x) const { return {x.a == 0 ? 0 : p_ - x.a, 0, false}; }

G1Element TransparentBackend::g1_pow(const G1Element& x, std::uint64_t k) const {
  return {mul_mod(x.a, k % p_, p_), 0, false};
}

bool TransparentBackend::g1_valid(const G1Element& x) const { return x.a < p_ && x.b == 0 && !x.infinity; }

G2Element TransparentBackend::g2_mul(const G2Element& x, const G2Element& y) const { return {(x.a + y.a) % p_, 0}; }

G2Element TransparentBackend::g2_inv(const G2Element& x) const { return {x.a == 0 ? 0 : p_ - x.a, 0}; }

G2Element TransparentBackend::g2_pow(const G2Element& x, std::uint64_t k) const {
  return {mul_mod(x.a, k % p_, p_), 0};
}

bool TransparentBackend::g2_valid(const G2Element& x) const { return x.a < p_ && x.b == 0; }

G2Element TransparentBackend::pair(const G1Element& x, const G1Element& y) const {
  return {mul_mod(x.a, y.a, p_), 0};
}

Bytes TransparentBackend::encode_g1(const G1Element& x) const {
  Bytes out;
  put_be(out, x.a, g1_encoded_size());
  return out;
}

Bytes TransparentBackend::encode_g2(const G2Element& x) const {
  Bytes out;
  put_be(out, x.a, g2_encoded_size());
  return out;
}

std::uint64_t TransparentBackend::decode_log(ByteView in) const {
  if (in.size() != scalar_width(p_)) fail(Errc::MalformedEncoding, "element has wrong length");
  std::uint64_t v = get_be(in);
  if (v >= p_) fail(Errc::MalformedEncoding, "exponent out of range");
  return v;
}

G1Element TransparentBackend::decode_g1(ByteView in) const { return {decode_log(in), 0, false}; }

G2Element TransparentBackend::decode_g2(ByteView in) const { return {decode_log(in), 0}; }

std::vector<std::pair<std::string, std::string>> TransparentBackend::describe() const {
  return {{"backend", "transparent"}, {"p", std::to_string(p_)}, {"g1", to_hex(encode_g1(g1_generator()))}};
}

GroupSuite make_transparent_suite(std::uint64_t p) { return GroupSuite(std::make_shared<TransparentBackend>(p)); }

G1Element transparent_g1(std::uint64_t e) { return {e, 0, false}; }

G2Element transparent_g2(std::uint64_t e) { return {e, 0}; }

Scalar transparent_log(const GroupSuite& suite, const G1Element& x) {
  if (suite.kind() != BackendKind::Transparent) fail(Errc::InvalidArgument, "discrete logs are only free on the transparent backend");
  return suite.scalar(x.a);
}

Scalar transparent_log(const GroupSuite& suite, const G2Element& x) {
  if (suite.kind() != BackendKind::Transparent) fail(Errc::InvalidArgument, "discrete logs are only free on the transparent backend");
  return suite.scalar(x.a);
}

}  // namespace pairid::algebra
