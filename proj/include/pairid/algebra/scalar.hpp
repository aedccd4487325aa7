#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace pairid::algebra {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

bool is_prime(std::uint64_t n);
/// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Element of Z_p. Carries its modulus; arithmetic between scalars of
/// different moduli is a programming error (asserted).
class Scalar {
 public:
  Scalar() = default;
  /// Reduces value mod modulus.
  Scalar(std::uint64_t value, std::uint64_t modulus);
  /// Reduces a signed value into [0, modulus).
  static Scalar from_signed(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// Throws Error(ZeroInverse) when zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;

 private:
  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 1;
};

/// Multiplicative inverse via the extended Euclidean algorithm.
Scalar scalar_inv(const Scalar& x);

}  // namespace pairid::algebra
