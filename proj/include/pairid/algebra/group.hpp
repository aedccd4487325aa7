#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pairid/algebra/scalar.hpp"
#include "pairid/bytes.hpp"
#include "pairid/rng.hpp"

namespace pairid::algebra {

/// Element of the source group G1. The payload words belong to the backend:
/// the transparent backend keeps the discrete log in `a`; the curve backend
/// keeps affine coordinates (a, b) or sets `infinity`.
struct G1Element {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool infinity = false;

  friend bool operator==(const G1Element&, const G1Element&) = default;
  friend auto operator<=>(const G1Element&, const G1Element&) = default;
};

/// Element of the target group G2. Transparent: discrete log in `a`.
/// Curve: the F_q^2 element a + b*i.
struct G2Element {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const G2Element&, const G2Element&) = default;
  friend auto operator<=>(const G2Element&, const G2Element&) = default;
};

enum class BackendKind { Transparent, TateCurve };

std::string backend_name(BackendKind kind);
/// Accepts "transparent" and "tate-curve" (alias "curve").
BackendKind parse_backend(const std::string& name);

enum class Role { Prover, Verifier };

/// Exponentiation and pairing counts for one role.
struct OpCounts {
  std::uint64_t g1_exp = 0;
  std::uint64_t g2_exp = 0;
  std::uint64_t pairings = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Elements put on the wire during a session, by kind. `bits` counts
/// n-bit challenge strings, which are not elements of Z_p.
struct Bandwidth {
  std::uint64_t g1 = 0;
  std::uint64_t g2 = 0;
  std::uint64_t zp = 0;
  std::uint64_t bits = 0;
  std::uint64_t bytes_g1 = 0;
  std::uint64_t bytes_g2 = 0;
  std::uint64_t bytes_zp = 0;
  std::uint64_t bytes_bits = 0;

  friend bool operator==(const Bandwidth&, const Bandwidth&) = default;
};

/// Per-session cost accumulator. Counts only grow until reset() is called
/// between sessions.
struct CostCounter {
  OpCounts prover;
  OpCounts verifier;
  Bandwidth bandwidth;

  OpCounts& role(Role r) { return r == Role::Prover ? prover : verifier; }
  const OpCounts& role(Role r) const { return r == Role::Prover ? prover : verifier; }
  void reset() { *this = CostCounter{}; }
};

/// A prime-order group pair with a symmetric pairing e: G1 x G1 -> G2.
/// Implementations are pure and thread-safe.
class PairingBackend {
 public:
  virtual ~PairingBackend() = default;

  virtual BackendKind kind() const = 0;
  /// Prime order p of G1 and G2.
  virtual std::uint64_t order() const = 0;

  virtual G1Element g1_identity() const = 0;
  virtual G1Element g1_generator() const = 0;
  virtual G1Element g1_mul(const G1Element& x, const G1Element& y) const = 0;
  virtual G1Element g1_inv(const G1Element& x) const = 0;
  virtual G1Element g1_pow(const G1Element& x, std::uint64_t k) const = 0;
  /// True iff x is a well-formed member of the order-p group.
  virtual bool g1_valid(const G1Element& x) const = 0;

  virtual G2Element g2_identity() const = 0;
  virtual G2Element g2_mul(const G2Element& x, const G2Element& y) const = 0;
  virtual G2Element g2_inv(const G2Element& x) const = 0;
  virtual G2Element g2_pow(const G2Element& x, std::uint64_t k) const = 0;
  virtual bool g2_valid(const G2Element& x) const = 0;

  virtual G2Element pair(const G1Element& x, const G1Element& y) const = 0;

  virtual std::size_t g1_encoded_size() const = 0;
  virtual std::size_t g2_encoded_size() const = 0;
  virtual Bytes encode_g1(const G1Element& x) const = 0;
  virtual Bytes encode_g2(const G2Element& x) const = 0;
  /// Throw MalformedEncoding, NotOnCurve or NotInSubgroup.
  virtual G1Element decode_g1(ByteView in) const = 0;
  virtual G2Element decode_g2(ByteView in) const = 0;

  /// Key/value lines describing the backend parameters (backend name first).
  virtual std::vector<std::pair<std::string, std::string>> describe() const = 0;
};

/// The ambient algebra of every protocol: a backend plus an optional cost
/// sink. Copies are cheap and share the backend. A suite returned by
/// counted() charges exponentiations and pairings to one role of a
/// CostCounter; such a suite must stay within one session.
class GroupSuite {
 public:
  explicit GroupSuite(std::shared_ptr<const PairingBackend> backend);

  GroupSuite counted(CostCounter& counter, Role role) const;
  GroupSuite uncounted() const;

  const PairingBackend& backend() const { return *backend_; }
  std::shared_ptr<const PairingBackend> backend_ptr() const { return backend_; }
  BackendKind kind() const { return backend_->kind(); }
  std::uint64_t p() const { return p_; }

  Scalar scalar(std::uint64_t v) const { return Scalar(v, p_); }
  Scalar random_scalar(Rng& rng) const { return scalar(rng.below(p_)); }
  Scalar random_nonzero_scalar(Rng& rng) const { return scalar(rng.nonzero_below(p_)); }

  G1Element g1_identity() const { return backend_->g1_identity(); }
  G1Element g1_generator() const { return g1_gen_; }
  G2Element g2_identity() const { return backend_->g2_identity(); }
  /// e(g, g) for the suite generator g.
  G2Element g2_generator() const { return g2_gen_; }

  /// b^k; charged as one G1 exponentiation.
  G1Element g1_exp(const G1Element& b, const Scalar& k) const;
  G2Element g2_exp(const G2Element& b, const Scalar& k) const;
  /// e(x, y); charged as one pairing.
  G2Element pairing(const G1Element& x, const G1Element& y) const;

  // Group operations and sampling are not charged.
  G1Element g1_mul(const G1Element& x, const G1Element& y) const { return backend_->g1_mul(x, y); }
  G1Element g1_inv(const G1Element& x) const { return backend_->g1_inv(x); }
  G1Element g1_div(const G1Element& x, const G1Element& y) const { return g1_mul(x, g1_inv(y)); }
  G2Element g2_mul(const G2Element& x, const G2Element& y) const { return backend_->g2_mul(x, y); }
  G2Element g2_inv(const G2Element& x) const { return backend_->g2_inv(x); }
  G2Element g2_div(const G2Element& x, const G2Element& y) const { return g2_mul(x, g2_inv(y)); }
  G1Element g1_pow_uncounted(const G1Element& b, const Scalar& k) const { return backend_->g1_pow(b, k.value()); }
  G2Element g2_pow_uncounted(const G2Element& b, const Scalar& k) const { return backend_->g2_pow(b, k.value()); }

  /// Uniform element of G1 (identity included).
  G1Element random_g1(Rng& rng) const;
  G1Element random_g1_nonidentity(Rng& rng) const;
  G2Element random_g2(Rng& rng) const;

  bool g1_valid(const G1Element& x) const { return backend_->g1_valid(x); }
  bool g2_valid(const G2Element& x) const { return backend_->g2_valid(x); }

  std::size_t scalar_size() const { return scalar_width(p_); }
  std::size_t g1_size() const { return backend_->g1_encoded_size(); }
  std::size_t g2_size() const { return backend_->g2_encoded_size(); }
  Bytes encode(const Scalar& s) const;
  Bytes encode(const G1Element& x) const { return backend_->encode_g1(x); }
  Bytes encode(const G2Element& x) const { return backend_->encode_g2(x); }
  /// Throws MalformedEncoding for wrong length or value >= p.
  Scalar decode_scalar(ByteView in) const;
  G1Element decode_g1(ByteView in) const { return backend_->decode_g1(in); }
  G2Element decode_g2(ByteView in) const { return backend_->decode_g2(in); }

  /// Text record: one "key value" line per parameter.
  std::string describe() const;

  /// Same backend parameters (counters are ignored).
  bool same_algebra(const GroupSuite& other) const;

 private:
  std::shared_ptr<const PairingBackend> backend_;
  std::uint64_t p_ = 0;
  G1Element g1_gen_;
  G2Element g2_gen_;
  OpCounts* sink_ = nullptr;
};

/// Decides whether (g, g^a, g^b, g^c) is a Diffie-Hellman tuple by comparing
/// e(g, g^c) with e(g^a, g^b).
bool ddh_solve(const GroupSuite& suite, const G1Element& g, const G1Element& ga, const G1Element& gb,
               const G1Element& gc);

/// Multiplicative order of x in G2 by repeated multiplication (brute force).
std::uint64_t g2_order_bruteforce(const GroupSuite& suite, const G2Element& x);
/// Order of x in G1 by repeated multiplication (brute force).
std::uint64_t g1_order_bruteforce(const GroupSuite& suite, const G1Element& x);

}  // namespace pairid::algebra
