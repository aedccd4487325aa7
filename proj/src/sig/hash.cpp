#include "pairid/sig/hash.hpp"

#include <openssl/evp.h>

#include "pairid/curve/tate.hpp"
#include "pairid/error.hpp"

namespace pairid::sig {

std::string hash_mode_name(HashMode mode) {
  switch (mode) {
    case HashMode::TestVector: return "test-vector";
    case HashMode::Seeded: return "seeded";
    case HashMode::TryAndIncrement: return "try-and-increment";
  }
  return "?";
}

HashMode parse_hash_mode(const std::string& name) {
  if (name == "test-vector") return HashMode::TestVector;
  if (name == "seeded") return HashMode::Seeded;
  if (name == "try-and-increment") return HashMode::TryAndIncrement;
  fail(Errc::InvalidArgument, "unknown hash mode '" + name + "'");
}

HashMode default_hash_mode(algebra::BackendKind kind) {
  return kind == algebra::BackendKind::Transparent ? HashMode::Seeded : HashMode::TryAndIncrement;
}

std::array<std::uint8_t, 32> sha256(ByteView data) {
  std::array<std::uint8_t, 32> out{};
  unsigned len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
    fail(Errc::HashFailed, "SHA-256 failed");
  }
  return out;
}

namespace {

std::array<std::uint8_t, 32> keyed_digest(std::uint64_t key, std::uint8_t domain, std::uint8_t counter,
                                          ByteView message) {
  Bytes buf;
  buf.reserve(message.size() + 10);
  put_be(buf, key, 8);
  buf.push_back(domain);
  buf.push_back(counter);
  buf.insert(buf.end(), message.begin(), message.end());
  return sha256(buf);
}

std::uint64_t digest_word(const std::array<std::uint8_t, 32>& d, std::size_t offset) {
  return get_be(ByteView(d).subspan(offset, 7));
}

G1Element try_and_increment(const GroupSuite& suite, std::uint64_t key, ByteView message) {
  const auto* backend = dynamic_cast<const curve::CurveBackend*>(&suite.backend());
  const auto& params = backend->params();
  const curve::Curve& c = backend->tate().curve();
  for (unsigned ctr = 0; ctr < 256; ++ctr) {
    const auto d = keyed_digest(key, 'T', static_cast<std::uint8_t>(ctr), message);
    const std::uint64_t x = digest_word(d, 0) % params.q;
    const auto y = c.sqrt(c.rhs(x));
    if (!y) continue;
    const std::uint64_t yv = (d[8] & 1) ? c.neg(*y) : *y;
    const curve::CurvePoint cleared = c.point_mul({x, yv, false}, params.h);
    if (!cleared.infinity) return curve::from_point(cleared);
  }
  fail(Errc::HashFailed, "try-and-increment found no subgroup point in 256 counters");
}

}  // namespace

G1Element GroupHash::operator()(const GroupSuite& suite, ByteView message) const {
  switch (mode_) {
    case HashMode::TestVector: {
      if (suite.kind() != algebra::BackendKind::Transparent) {
        fail(Errc::ModeBackendMismatch, "test-vector hashing needs the transparent backend");
      }
      std::uint64_t e = 0;
      for (auto b : message) e = (e * 256 + b) % suite.p();
      return suite.g1_pow_uncounted(suite.g1_generator(), suite.scalar(e));
    }
    case HashMode::Seeded: {
      const auto d = keyed_digest(key_, 'S', 0, message);
      // Never the identity: an identity hash would accept sigma = 1 under any key.
      return suite.g1_pow_uncounted(suite.g1_generator(), suite.scalar(1 + digest_word(d, 0) % (suite.p() - 1)));
    }
    case HashMode::TryAndIncrement:
      if (suite.kind() != algebra::BackendKind::TateCurve) {
        fail(Errc::ModeBackendMismatch, "try-and-increment hashing needs the curve backend");
      }
      return try_and_increment(suite, key_, message);
  }
  fail(Errc::InvalidArgument, "unknown hash mode");
}

}  // namespace pairid::sig
