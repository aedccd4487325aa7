#include "pairid/curve/curve.hpp"

#include <algorithm>

#include "pairid/error.hpp"

namespace pairid::curve {

using algebra::pow_mod;

Curve::Curve(std::uint64_t q) : q_(q) {
  if (q < 3 || q % 4 != 3 || !algebra::is_prime(q)) {
    fail(Errc::InvalidArgument, "curve field needs a prime q = 3 mod 4, got " + std::to_string(q));
  }
  if (q >= (1ULL << 62)) fail(Errc::InvalidArgument, "field prime too large");
}

std::uint64_t Curve::add(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t s = x + y;
  return s >= q_ ? s - q_ : s;
}

std::uint64_t Curve::sub(std::uint64_t x, std::uint64_t y) const { return x >= y ? x - y : x + q_ - y; }

std::uint64_t Curve::inv(std::uint64_t x) const { return algebra::scalar_inv(algebra::Scalar(x, q_)).value(); }

std::optional<std::uint64_t> Curve::sqrt(std::uint64_t x) const {
  x %= q_;
  std::uint64_t r = pow_mod(x, (q_ + 1) / 4, q_);
  if (mul(r, r) != x) return std::nullopt;
  return std::min(r, neg(r));
}

std::uint64_t Curve::rhs(std::uint64_t x) const { return add(mul(mul(x, x), x), x); }

Fq2 Curve::add(const Fq2& x, const Fq2& y) const { return {add(x.a, y.a), add(x.b, y.b)}; }

Fq2 Curve::sub(const Fq2& x, const Fq2& y) const { return {sub(x.a, y.a), sub(x.b, y.b)}; }

Fq2 Curve::mul(const Fq2& x, const Fq2& y) const {
  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
  return {sub(mul(x.a, y.a), mul(x.b, y.b)), add(mul(x.a, y.b), mul(x.b, y.a))};
}

Fq2 Curve::inv(const Fq2& x) const {
  std::uint64_t norm = add(mul(x.a, x.a), mul(x.b, x.b));
  std::uint64_t n_inv = inv(norm);
  return {mul(x.a, n_inv), mul(neg(x.b), n_inv)};
}

Fq2 Curve::pow(Fq2 base, std::uint64_t e) const {
  Fq2 result = one();
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Curve::on_curve(const CurvePoint& P) const {
  if (P.infinity) return true;
  if (P.x >= q_ || P.y >= q_) return false;
  return mul(P.y, P.y) == rhs(P.x);
}

bool Curve::on_curve(const CurvePoint2& P) const {
  if (P.infinity) return true;
  Fq2 lhs = mul(P.y, P.y);
  Fq2 r = add(mul(mul(P.x, P.x), P.x), P.x);
  return lhs == r;
}

CurvePoint Curve::point_neg(const CurvePoint& P) const {
  if (P.infinity) return P;
  return {P.x, neg(P.y), false};
}

CurvePoint Curve::add_unchecked(const CurvePoint& P, const CurvePoint& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  std::uint64_t lambda;
  if (P.x == Q.x) {
    if (add(P.y, Q.y) == 0) return CurvePoint::at_infinity();
    // tangent: (3x^2 + 1) / 2y
    lambda = mul(add(mul(3 % q_, mul(P.x, P.x)), 1), inv(add(P.y, P.y)));
  } else {
    lambda = mul(sub(Q.y, P.y), inv(sub(Q.x, P.x)));
  }
  std::uint64_t x3 = sub(sub(mul(lambda, lambda), P.x), Q.x);
  std::uint64_t y3 = sub(mul(lambda, sub(P.x, x3)), P.y);
  return {x3, y3, false};
}

CurvePoint Curve::point_add(const CurvePoint& P, const CurvePoint& Q) const {
  if (!on_curve(P) || !on_curve(Q)) fail(Errc::NotOnCurve, "point_add input off the curve");
  return add_unchecked(P, Q);
}

CurvePoint Curve::point_mul(const CurvePoint& P, std::uint64_t k) const {
  if (!on_curve(P)) fail(Errc::NotOnCurve, "point_mul input off the curve");
  CurvePoint result = CurvePoint::at_infinity();
  CurvePoint base = P;
  while (k) {
    if (k & 1) result = add_unchecked(result, base);
    base = add_unchecked(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<CurvePoint> Curve::enumerate() const {
  std::vector<CurvePoint> points{CurvePoint::at_infinity()};
  for (std::uint64_t x = 0; x < q_; ++x) {
    auto y = sqrt(rhs(x));
    if (!y) continue;
    points.push_back({x, *y, false});
    if (*y != 0) points.push_back({x, neg(*y), false});
  }
  return points;
}

CurvePoint2 Curve::distortion(const CurvePoint& P) const {
  if (!on_curve(P)) fail(Errc::NotOnCurve, "distortion input off the curve");
  if (P.infinity) return {{}, {}, true};
  return {{neg(P.x), 0}, {0, P.y}, false};
}

}  // namespace pairid::curve
