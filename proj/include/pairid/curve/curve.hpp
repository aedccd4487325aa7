#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pairid/algebra/scalar.hpp"

namespace pairid::curve {

/// Element a + b*i of F_q^2 with i^2 = -1 (a field because q = 3 mod 4).
struct Fq2 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const Fq2&, const Fq2&) = default;
};

/// Affine point of y^2 = x^3 + x over F_q, or the point at infinity.
struct CurvePoint {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool infinity = false;

  static CurvePoint at_infinity() { return {0, 0, true}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Affine point of the same curve over F_q^2 (image of the distortion map).
struct CurvePoint2 {
  Fq2 x;
  Fq2 y;
  bool infinity = false;

  friend bool operator==(const CurvePoint2&, const CurvePoint2&) = default;
};

/// Arithmetic in F_q, F_q^2 and on E: y^2 = x^3 + x over F_q.
class Curve {
 public:
  /// q must be an odd prime with q = 3 mod 4 (InvalidArgument otherwise).
  explicit Curve(std::uint64_t q);

  std::uint64_t q() const { return q_; }

  // F_q
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return algebra::mul_mod(x, y, q_); }
  std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : q_ - x; }
  std::uint64_t inv(std::uint64_t x) const;
  /// Square root when x is a square; the root returned is the smaller of the two.
  std::optional<std::uint64_t> sqrt(std::uint64_t x) const;
  std::uint64_t rhs(std::uint64_t x) const;  // x^3 + x

  // F_q^2
  Fq2 add(const Fq2& x, const Fq2& y) const;
  Fq2 sub(const Fq2& x, const Fq2& y) const;
  Fq2 mul(const Fq2& x, const Fq2& y) const;
  Fq2 inv(const Fq2& x) const;
  Fq2 conj(const Fq2& x) const { return {x.a, neg(x.b)}; }
  Fq2 pow(Fq2 base, std::uint64_t e) const;
  Fq2 one() const { return {1 % q_, 0}; }

  // E(F_q)
  bool on_curve(const CurvePoint& P) const;
  bool on_curve(const CurvePoint2& P) const;
  CurvePoint point_neg(const CurvePoint& P) const;
  /// Group law. Throws NotOnCurve if an input is off the curve.
  CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q) const;
  /// k*P by double-and-add. Throws NotOnCurve.
  CurvePoint point_mul(const CurvePoint& P, std::uint64_t k) const;
  /// Lists every point of E(F_q), infinity first, then by x and y.
  std::vector<CurvePoint> enumerate() const;

  /// phi(x, y) = (-x, i*y), an endomorphism of E over F_q^2 that moves
  /// points of E(F_q) out of their own cyclic subgroup.
  CurvePoint2 distortion(const CurvePoint& P) const;

 private:
  CurvePoint add_unchecked(const CurvePoint& P, const CurvePoint& Q) const;

  std::uint64_t q_;
};

}  // namespace pairid::curve
