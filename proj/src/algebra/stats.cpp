#include "pairid/stats.hpp"

#include <cmath>

namespace pairid {

double binomial_sigma(double p, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

bool within_sigmas(double observed, double expected, std::uint64_t n, double k) {
  return std::abs(observed - expected) <= k * binomial_sigma(expected, n);
}

bool meets_lower_bound(double observed, double bound, std::uint64_t n, double k) {
  return observed >= bound - k * binomial_sigma(bound, n);
}

bool estimates_agree(double a, std::uint64_t na, double b, std::uint64_t nb, double k) {
  const double sa = binomial_sigma(a, na);
  const double sb = binomial_sigma(b, nb);
  return std::abs(a - b) <= k * std::sqrt(sa * sa + sb * sb);
}

}  // namespace pairid
