#include "pairid/algebra/scalar.hpp"

#include <cassert>

#include "pairid/error.hpp"

namespace pairid::algebra {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Scalar::Scalar(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {
  assert(modulus > 0);
}

Scalar Scalar::from_signed(std::int64_t value, std::uint64_t modulus) {
  auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return Scalar(static_cast<std::uint64_t>(r), modulus);
}

Scalar Scalar::operator+(const Scalar& o) const {
  assert(modulus_ == o.modulus_);
  std::uint64_t s = value_ + o.value_;
  if (s >= modulus_) s -= modulus_;
  return Scalar(s, modulus_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  assert(modulus_ == o.modulus_);
  return Scalar(value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_, modulus_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  assert(modulus_ == o.modulus_);
  return Scalar(mul_mod(value_, o.value_, modulus_), modulus_);
}

Scalar Scalar::operator-() const { return Scalar(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

Scalar Scalar::inverse() const { return scalar_inv(*this); }

Scalar scalar_inv(const Scalar& x) {
  if (x.is_zero()) fail(Errc::ZeroInverse, "zero has no inverse mod " + std::to_string(x.modulus()));
  // Invariant: old_r = old_s * x (mod m), r = s * x (mod m).
  std::int64_t old_r = static_cast<std::int64_t>(x.value());
  std::int64_t r = static_cast<std::int64_t>(x.modulus());
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(Errc::ZeroInverse, "value not invertible (modulus not prime)");
  return Scalar::from_signed(old_s, x.modulus());
}

}  // namespace pairid::algebra
