#include "pairid/algebra/group.hpp"

#include <sstream>

#include "pairid/error.hpp"

namespace pairid::algebra {

std::string backend_name(BackendKind kind) {
  return kind == BackendKind::Transparent ? "transparent" : "tate-curve";
}

BackendKind parse_backend(const std::string& name) {
  if (name == "transparent") return BackendKind::Transparent;
  if (name == "tate-curve" || name == "curve") return BackendKind::TateCurve;
  fail(Errc::InvalidArgument, "unknown backend '" + name + "'");
}

GroupSuite::GroupSuite(std::shared_ptr<const PairingBackend> backend)
    : backend_(std::move(backend)),
      p_(backend_->order()),
      g1_gen_(backend_->g1_generator()),
      g2_gen_(backend_->pair(g1_gen_, g1_gen_)) {}

GroupSuite GroupSuite::counted(CostCounter& counter, Role role) const {
  GroupSuite copy = *this;
  copy.sink_ = &counter.role(role);
  return copy;
}

GroupSuite GroupSuite::uncounted() const {
  GroupSuite copy = *this;
  copy.sink_ = nullptr;
  return copy;
}

G1Element GroupSuite::g1_exp(const G1Element& b, const Scalar& k) const {
  if (sink_) ++sink_->g1_exp;
  return backend_->g1_pow(b, k.value());
}

G2Element GroupSuite::g2_exp(const G2Element& b, const Scalar& k) const {
  if (sink_) ++sink_->g2_exp;
  return backend_->g2_pow(b, k.value());
}

G2Element GroupSuite::pairing(const G1Element& x, const G1Element& y) const {
  if (sink_) ++sink_->pairings;
  return backend_->pair(x, y);
}

G1Element GroupSuite::random_g1(Rng& rng) const { return backend_->g1_pow(g1_gen_, rng.below(p_)); }

G1Element GroupSuite::random_g1_nonidentity(Rng& rng) const {
  return backend_->g1_pow(g1_gen_, rng.nonzero_below(p_));
}

G2Element GroupSuite::random_g2(Rng& rng) const { return backend_->g2_pow(g2_gen_, rng.below(p_)); }

Bytes GroupSuite::encode(const Scalar& s) const {
  Bytes out;
  put_be(out, s.value(), scalar_size());
  return out;
}

Scalar GroupSuite::decode_scalar(ByteView in) const {
  if (in.size() != scalar_size()) fail(Errc::MalformedEncoding, "scalar has wrong length");
  std::uint64_t v = get_be(in);
  if (v >= p_) fail(Errc::MalformedEncoding, "scalar out of range");
  return scalar(v);
}

std::string GroupSuite::describe() const {
  std::ostringstream out;
  for (const auto& [k, v] : backend_->describe()) out << k << ' ' << v << '\n';
  return out.str();
}

bool GroupSuite::same_algebra(const GroupSuite& other) const {
  return backend_ == other.backend_ || backend_->describe() == other.backend_->describe();
}

bool ddh_solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga, const G1Element& gb,
               const G1Element& gc) {
  const G2Element h1 = suite.pairing(g, gc);
  const G2Element h2 = suite.pairing(ga, gb);
  return h1 == h2;
}

std::uint64_t g2_order_bruteforce(const GroupSuite& suite, const G2Element& x) {
  const G2Element one = suite.g2_identity();
  G2Element acc = x;
  std::uint64_t n = 1;
  while (acc != one) {
    acc = suite.g2_mul(acc, x);
    ++n;
  }
  return n;
}

std::uint64_t g1_order_bruteforce(const GroupSuite& suite, const G1Element& x) {
  const G1Element one = suite.g1_identity();
  G1Element acc = x;
  std::uint64_t n = 1;
  while (acc != one) {
    acc = suite.g1_mul(acc, x);
    ++n;
  }
  return n;
}

}  // namespace pairid::algebra
