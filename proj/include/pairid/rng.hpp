#pragma once

#include <cstdint>
#include <random>

namespace pairid {

/// Seeded deterministic coin source.
///
/// Every randomized procedure in the library draws from an Rng so that a
/// run can be replayed exactly from its seed. Sampling uses rejection on the
/// raw mt19937_64 stream (whose output is fixed by the standard) rather than
/// std::uniform_int_distribution, so draws are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream derived from (seed, stream).
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [1, n).
  std::uint64_t nonzero_below(std::uint64_t n);
  /// Uniform double in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a seed with a label; used to derive per-trial and per-role seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label);

}  // namespace pairid
