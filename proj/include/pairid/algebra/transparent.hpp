#pragma once

#include <cstdint>
#include <memory>

#include "pairid/algebra/group.hpp"

namespace pairid::algebra {

/// Exponent backend: G1 and G2 are both Z_p written multiplicatively, each
/// element stored as its discrete log to a fixed generator. The pairing is
/// exponent multiplication, so every pairing identity can be checked by
/// plain modular arithmetic and discrete logs are free.
class TransparentBackend final : public PairingBackend {
 public:
  /// Requires p prime and p >= 5 (InvalidArgument otherwise).
  explicit TransparentBackend(std::uint64_t p);

  BackendKind kind() const override { return BackendKind::Transparent; }
  std::uint64_t order() const override { return p_; }

  G1Element g1_identity() const override { return {}; }
  G1Element g1_generator() const override { return {1, 0, false}; }
  G1Element g1_mul(const G1Element& x, const G1Element& y) const override;
  G1Element g1_inv(const G1Element& x) const override;
  G1Element g1_pow(const G1Element& x, std::uint64_t k) const override;
  bool g1_valid(const G1Element& x) const override;

  G2Element g2_identity() const override { return {}; }
  G2Element g2_mul(const G2Element& x, const G2Element& y) const override;
  G2Element g2_inv(const G2Element& x) const override;
  G2Element g2_pow(const G2Element& x, std::uint64_t k) const override;
  bool g2_valid(const G2Element& x) const override;

  G2Element pair(const G1Element& x, const G1Element& y) const override;

  std::size_t g1_encoded_size() const override { return scalar_width(p_); }
  std::size_t g2_encoded_size() const override { return scalar_width(p_); }
  Bytes encode_g1(const G1Element& x) const override;
  Bytes encode_g2(const G2Element& x) const override;
  G1Element decode_g1(ByteView in) const override;
  G2Element decode_g2(ByteView in) const override;

  std::vector<std::pair<std::string, std::string>> describe() const override;

 private:
  std::uint64_t decode_log(ByteView in) const;

  std::uint64_t p_;
};

GroupSuite make_transparent_suite(std::uint64_t p);

/// G1 element g^e for the transparent generator g.
G1Element transparent_g1(std::uint64_t e);
/// G2 element e(g,g)^e.
G2Element transparent_g2(std::uint64_t e);

/// Discrete logs, free on this backend. Callers must hold a transparent suite
/// (InvalidArgument otherwise); used by scripted adversaries and oracles.
Scalar transparent_log(const GroupSuite& suite, const G1Element& x);
Scalar transparent_log(const GroupSuite& suite, const G2Element& x);

}  // namespace pairid::algebra
