#include "pairid/curve/tate.hpp"

#include "pairid/algebra/transparent.hpp"
#include "pairid/bytes.hpp"
#include "pairid/error.hpp"
#include "pairid/rng.hpp"

namespace pairid::curve {

using algebra::G1Element;
using algebra::G2Element;

namespace {

constexpr std::uint64_t kDeskScaleLimit = 10000;

[[noreturn]] void invalid(const std::string& what) { fail(Errc::ValidationFailed, what); }

}  // namespace

ValidationReport enumerate_and_validate(std::uint64_t q, std::uint64_t subgroup_order) {
  if (q > kDeskScaleLimit) invalid("q = " + std::to_string(q) + " is beyond desk scale (q <= 10^4)");
  if (!algebra::is_prime(q)) invalid("q = " + std::to_string(q) + " is not prime");
  if (q % 4 != 3) invalid("q = " + std::to_string(q) + " is not 3 mod 4; y^2 = x^3 + x is not supersingular with this distortion map");

  const Curve curve(q);
  const auto points = curve.enumerate();
  const std::uint64_t n = points.size();
  if (n != q + 1) invalid("#E(F_q) = " + std::to_string(n) + " != q + 1");

  std::uint64_t p = subgroup_order;
  if (p == 0) p = algebra::prime_factors(n).back();
  if (!algebra::is_prime(p) || n % p != 0) invalid("p = " + std::to_string(p) + " is not a prime factor of q + 1");
  if (p < 5) invalid("subgroup order p = " + std::to_string(p) + " is too small to host protocol scalars (need p >= 5)");
  if ((n / p) % p == 0) invalid("p^2 divides #E(F_q)");
  if ((q - 1) % p == 0) invalid("embedding degree is 1, not 2");

  const std::uint64_t h = n / p;
  CurvePoint gen = CurvePoint::at_infinity();
  for (const auto& R : points) {
    gen = curve.point_mul(R, h);
    if (!gen.infinity) break;
  }
  if (gen.infinity) invalid("no point of order p found");

  CurveParams params{q, p, h, gen};
  validate_params(params);
  return {params, n, 2};
}

void validate_params(const CurveParams& params) {
  if (!algebra::is_prime(params.q) || params.q % 4 != 3) invalid("q must be a prime = 3 mod 4");
  if (!algebra::is_prime(params.p) || params.p < 5) invalid("p must be a prime >= 5");
  if (params.p * params.h != params.q + 1) invalid("p * h != q + 1");
  if (params.h % params.p == 0) invalid("p^2 divides q + 1");
  const Curve curve(params.q);
  if (params.generator.infinity || !curve.on_curve(params.generator)) invalid("generator is not a finite curve point");
  if (!curve.point_mul(params.generator, params.p).infinity) invalid("generator does not have order p");
  const TatePairing tate(params);
  const Fq2 egg = tate.pair(params.generator, params.generator);
  if (egg == curve.one()) invalid("pairing is degenerate on the generator");
  if (curve.pow(egg, params.p) != curve.one()) invalid("pairing output order does not divide p");
}

CurveParams default_params(std::uint64_t p) {
  switch (p) {
    case 5: return enumerate_and_validate(59).params;
    case 7: return enumerate_and_validate(83).params;
    case 131: return enumerate_and_validate(523).params;
    default: fail(Errc::InvalidArgument, "no shipped curve with subgroup order " + std::to_string(p) + " (use 5, 7 or 131)");
  }
}

TatePairing::TatePairing(CurveParams params) : params_(params), curve_(params.q) {}

std::optional<Fq2> TatePairing::miller_loop(const CurvePoint& P, const CurvePoint& Q) const {
  const Curve& c = curve_;
  if (P.infinity || Q.infinity) return c.one();

  // phi(Q) = (-x_Q, i*y_Q). A line y = y_T + lambda*(x - x_T) evaluated there
  // is (-y_T - lambda*(-x_Q - x_T)) + y_Q*i.
  const std::uint64_t dx = c.neg(Q.x);
  auto line = [&](const CurvePoint& T, std::uint64_t lambda) {
    return Fq2{c.sub(c.neg(T.y), c.mul(lambda, c.sub(dx, T.x))), Q.y};
  };
  const Fq2 zero{0, 0};

  Fq2 f = c.one();
  CurvePoint T = P;
  const std::uint64_t n = params_.p;
  for (int i = static_cast<int>(bit_length(n)) - 2; i >= 0; --i) {
    f = c.mul(f, f);
    if (!T.infinity) {
      if (T.y == 0) {
        T = CurvePoint::at_infinity();  // vertical tangent, factor in F_q
      } else {
        const std::uint64_t lambda =
            c.mul(c.add(c.mul(3 % c.q(), c.mul(T.x, T.x)), 1), c.inv(c.add(T.y, T.y)));
        f = c.mul(f, line(T, lambda));
        T = c.point_add(T, T);
      }
    }
    if ((n >> i) & 1) {
      if (T.infinity) {
        T = P;
      } else if (T.x == P.x && T.y != P.y) {
        T = CurvePoint::at_infinity();  // vertical chord, factor in F_q
      } else {
        const std::uint64_t lambda = T == P
            ? c.mul(c.add(c.mul(3 % c.q(), c.mul(T.x, T.x)), 1), c.inv(c.add(T.y, T.y)))
            : c.mul(c.sub(P.y, T.y), c.inv(c.sub(P.x, T.x)));
        f = c.mul(f, line(T, lambda));
        T = c.point_add(T, P);
      }
    }
    if (f == zero) return std::nullopt;
  }
  return f;
}

Fq2 TatePairing::final_exponentiation(const Fq2& f) const {
  // f^(q-1) = conj(f) / f since Frobenius conjugates when q = 3 mod 4.
  const Fq2 g = curve_.mul(curve_.conj(f), curve_.inv(f));
  return curve_.pow(g, (params_.q + 1) / params_.p);
}

std::optional<Fq2> TatePairing::pair_with_offset(const CurvePoint& P, const CurvePoint& Q,
                                                 const CurvePoint& S) const {
  const CurvePoint shifted = curve_.point_add(Q, S);
  if (S.infinity || shifted.infinity) return std::nullopt;
  auto num = miller_loop(P, shifted);
  auto den = miller_loop(P, S);
  if (!num || !den) return std::nullopt;
  return final_exponentiation(curve_.mul(*num, curve_.inv(*den)));
}

Fq2 TatePairing::pair(const CurvePoint& P, const CurvePoint& Q) const {
  if (P.infinity || Q.infinity) return curve_.one();
  if (auto f = miller_loop(P, Q)) return final_exponentiation(*f);
  Rng rng(derive_seed(P.x * 0x100000001ULL + P.y, Q.x * 0x100000001ULL + Q.y));
  for (int attempt = 0; attempt < 4; ++attempt) {
    const CurvePoint S = curve_.point_mul(params_.generator, rng.nonzero_below(params_.p));
    if (auto value = pair_with_offset(P, Q, S)) return *value;
  }
  fail(Errc::DegeneratePairing, "Miller evaluation vanished after 4 offset retries");
}

CurvePoint to_point(const G1Element& x) { return {x.a, x.b, x.infinity}; }

G1Element from_point(const CurvePoint& P) {
  if (P.infinity) return {0, 0, true};
  return {P.x, P.y, false};
}

CurveBackend::CurveBackend(CurveParams params) : tate_(params), width_(scalar_width(params.q)) {}

G1Element CurveBackend::g1_generator() const { return from_point(params().generator); }

G1Element CurveBackend::g1_mul(const G1Element& x, const G1Element& y) const {
  return from_point(tate_.curve().point_add(to_point(x), to_point(y)));
}

G1Element CurveBackend::g1_inv(const G1Element& x) const { return from_point(tate_.curve().point_neg(to_point(x))); }

G1Element CurveBackend::g1_pow(const G1Element& x, std::uint64_t k) const {
  return from_point(tate_.curve().point_mul(to_point(x), k % params().p));
}

bool CurveBackend::g1_valid(const G1Element& x) const {
  if (x.infinity) return x.a == 0 && x.b == 0;
  const CurvePoint P = to_point(x);
  return tate_.curve().on_curve(P) && tate_.curve().point_mul(P, params().p).infinity;
}

G2Element CurveBackend::g2_mul(const G2Element& x, const G2Element& y) const {
  Fq2 r = tate_.curve().mul(Fq2{x.a, x.b}, Fq2{y.a, y.b});
  return {r.a, r.b};
}

G2Element CurveBackend::g2_inv(const G2Element& x) const {
  Fq2 r = tate_.curve().inv(Fq2{x.a, x.b});
  return {r.a, r.b};
}

G2Element CurveBackend::g2_pow(const G2Element& x, std::uint64_t k) const {
  Fq2 r = tate_.curve().pow(Fq2{x.a, x.b}, k % params().p);
  return {r.a, r.b};
}

bool CurveBackend::g2_valid(const G2Element& x) const {
  const std::uint64_t q = params().q;
  if (x.a >= q || x.b >= q || (x.a == 0 && x.b == 0)) return false;
  return tate_.curve().pow(Fq2{x.a, x.b}, params().p) == tate_.curve().one();
}

G2Element CurveBackend::pair(const G1Element& x, const G1Element& y) const {
  Fq2 r = tate_.pair(to_point(x), to_point(y));
  return {r.a, r.b};
}

std::size_t CurveBackend::g1_encoded_size() const { return 1 + width_; }

std::size_t CurveBackend::g2_encoded_size() const { return 2 * width_; }

Bytes CurveBackend::encode_g1(const G1Element& x) const {
  Bytes out;
  if (x.infinity) {
    out.push_back(0x00);
    put_be(out, 0, width_);
  } else {
    out.push_back(static_cast<std::uint8_t>(0x02 | (x.b & 1)));
    put_be(out, x.a, width_);
  }
  return out;
}

Bytes CurveBackend::encode_g2(const G2Element& x) const {
  Bytes out;
  put_be(out, x.a, width_);
  put_be(out, x.b, width_);
  return out;
}

G1Element CurveBackend::decode_g1(ByteView in) const {
  if (in.size() != g1_encoded_size()) fail(Errc::MalformedEncoding, "G1 encoding has wrong length");
  const std::uint8_t flag = in[0];
  const std::uint64_t x = get_be(in.subspan(1));
  if (flag == 0x00) {
    if (x != 0) fail(Errc::MalformedEncoding, "nonzero payload on point at infinity");
    return g1_identity();
  }
  if (flag != 0x02 && flag != 0x03) fail(Errc::MalformedEncoding, "unknown point flag");
  const Curve& c = tate_.curve();
  if (x >= params().q) fail(Errc::MalformedEncoding, "x-coordinate out of range");
  auto y = c.sqrt(c.rhs(x));
  if (!y) fail(Errc::NotOnCurve, "x^3 + x is not a square");
  std::uint64_t yv = *y;
  if ((yv & 1) != (flag & 1)) yv = c.neg(yv);
  if ((yv & 1) != (flag & 1)) fail(Errc::MalformedEncoding, "sign bit set on a point with y = 0");
  G1Element P{x, yv, false};
  if (!c.point_mul(to_point(P), params().p).infinity) fail(Errc::NotInSubgroup, "point is not in the order-p subgroup");
  return P;
}

G2Element CurveBackend::decode_g2(ByteView in) const {
  if (in.size() != g2_encoded_size()) fail(Errc::MalformedEncoding, "G2 encoding has wrong length");
  G2Element x{get_be(in.subspan(0, width_)), get_be(in.subspan(width_))};
  if (x.a >= params().q || x.b >= params().q) fail(Errc::MalformedEncoding, "F_q^2 coefficient out of range");
  if (!g2_valid(x)) fail(Errc::NotInSubgroup, "element is not in the order-p subgroup of F_q^2*");
  return x;
}

std::vector<std::pair<std::string, std::string>> CurveBackend::describe() const {
  const CurveParams& c = params();
  return {{"backend", "tate-curve"},       {"q", std::to_string(c.q)},  {"p", std::to_string(c.p)},
          {"h", std::to_string(c.h)},      {"gx", std::to_string(c.generator.x)},
          {"gy", std::to_string(c.generator.y)}};
}

algebra::GroupSuite make_curve_suite(const CurveParams& params) {
  return algebra::GroupSuite(std::make_shared<CurveBackend>(params));
}

namespace {

std::uint64_t field_u64(const std::map<std::string, std::string>& fields, const std::string& key) {
  auto it = fields.find(key);
  if (it == fields.end()) fail(Errc::BadRecord, "suite record is missing '" + key + "'");
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    fail(Errc::BadRecord, "suite record field '" + key + "' is not an integer");
  }
}

}  // namespace

algebra::GroupSuite suite_from_record(const std::map<std::string, std::string>& fields) {
  auto it = fields.find("backend");
  if (it == fields.end()) fail(Errc::BadRecord, "suite record is missing 'backend'");
  const auto kind = algebra::parse_backend(it->second);
  if (kind == algebra::BackendKind::Transparent) return algebra::make_transparent_suite(field_u64(fields, "p"));
  CurveParams params{field_u64(fields, "q"), field_u64(fields, "p"), field_u64(fields, "h"),
                     {field_u64(fields, "gx"), field_u64(fields, "gy"), false}};
  validate_params(params);
  return make_curve_suite(params);
}

algebra::GroupSuite make_suite(algebra::BackendKind kind, std::uint64_t p) {
  if (kind == algebra::BackendKind::Transparent) return algebra::make_transparent_suite(p);
  return make_curve_suite(default_params(p));
}

}  // namespace pairid::curve
