#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "pairid/algebra/group.hpp"
#include "pairid/curve/curve.hpp"

namespace pairid::curve {

/// Supersingular curve y^2 = x^3 + x over F_q (q = 3 mod 4) with an order-p
/// subgroup: N = #E(F_q) = q + 1 = p * h, embedding degree 2.
struct CurveParams {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t h = 0;
  CurvePoint generator;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

struct ValidationReport {
  CurveParams params;
  std::uint64_t point_count = 0;  // N, by enumeration
  unsigned embedding_degree = 0;
};

/// Enumerates E(F_q), checks N = q + 1, factors out the cofactor and returns a
/// subgroup generator. When `subgroup_order` is zero the largest prime factor
/// of q + 1 is used. Throws ValidationFailed naming the violated condition.
ValidationReport enumerate_and_validate(std::uint64_t q, std::uint64_t subgroup_order = 0);

/// Checks a parameter record (from a file) without trusting it.
void validate_params(const CurveParams& params);

/// Shipped desk-scale parameter sets: (59, 5), (83, 7), (523, 131).
CurveParams default_params(std::uint64_t p);

/// Reduced Tate pairing on the order-p subgroup, made symmetric with the
/// distortion map: e(P, Q) = f_{p,P}(phi(Q))^((q^2 - 1)/p).
class TatePairing {
 public:
  explicit TatePairing(CurveParams params);

  const Curve& curve() const { return curve_; }
  const CurveParams& params() const { return params_; }

  /// Miller function f_{p,P} evaluated at phi(Q), with vertical-line factors
  /// dropped (they lie in F_q and vanish under the final exponentiation).
  /// Returns nullopt when a line evaluation is zero.
  std::optional<Fq2> miller_loop(const CurvePoint& P, const CurvePoint& Q) const;
  Fq2 final_exponentiation(const Fq2& f) const;

  /// Throws DegeneratePairing after four failed offset retries.
  Fq2 pair(const CurvePoint& P, const CurvePoint& Q) const;
  /// e(P, Q + S) / e(P, S) evaluated from raw Miller values; equals pair(P, Q).
  std::optional<Fq2> pair_with_offset(const CurvePoint& P, const CurvePoint& Q, const CurvePoint& S) const;

 private:
  CurveParams params_;
  Curve curve_;
};

class CurveBackend final : public algebra::PairingBackend {
 public:
  explicit CurveBackend(CurveParams params);

  const TatePairing& tate() const { return tate_; }
  const CurveParams& params() const { return tate_.params(); }

  algebra::BackendKind kind() const override { return algebra::BackendKind::TateCurve; }
  std::uint64_t order() const override { return params().p; }

  algebra::G1Element g1_identity() const override { return {0, 0, true}; }
  algebra::G1Element g1_generator() const override;
  algebra::G1Element g1_mul(const algebra::G1Element& x, const algebra::G1Element& y) const override;
  algebra::G1Element g1_inv(const algebra::G1Element& x) const override;
  algebra::G1Element g1_pow(const algebra::G1Element& x, std::uint64_t k) const override;
  bool g1_valid(const algebra::G1Element& x) const override;

  algebra::G2Element g2_identity() const override { return {1, 0}; }
  algebra::G2Element g2_mul(const algebra::G2Element& x, const algebra::G2Element& y) const override;
  algebra::G2Element g2_inv(const algebra::G2Element& x) const override;
  algebra::G2Element g2_pow(const algebra::G2Element& x, std::uint64_t k) const override;
  bool g2_valid(const algebra::G2Element& x) const override;

  algebra::G2Element pair(const algebra::G1Element& x, const algebra::G1Element& y) const override;

  std::size_t g1_encoded_size() const override;
  std::size_t g2_encoded_size() const override;
  /// One flag byte (0x00 infinity, 0x02 even y, 0x03 odd y) then x.
  Bytes encode_g1(const algebra::G1Element& x) const override;
  /// Real then imaginary part, each fixed width.
  Bytes encode_g2(const algebra::G2Element& x) const override;
  algebra::G1Element decode_g1(ByteView in) const override;
  algebra::G2Element decode_g2(ByteView in) const override;

  std::vector<std::pair<std::string, std::string>> describe() const override;

 private:
  TatePairing tate_;
  std::size_t width_;
};

CurvePoint to_point(const algebra::G1Element& x);
algebra::G1Element from_point(const CurvePoint& P);

algebra::GroupSuite make_curve_suite(const CurveParams& params);

/// Rebuilds a suite from its describe() record (either backend).
algebra::GroupSuite suite_from_record(const std::map<std::string, std::string>& fields);

/// Suite of order p: any prime p >= 5 for the transparent backend, one of the
/// shipped subgroup orders (5, 7, 131) for the curve backend.
algebra::GroupSuite make_suite(algebra::BackendKind kind, std::uint64_t p);

}  // namespace pairid::curve
