#pragma once

#include <cstdint>

namespace pairid {

/// Standard deviation of a binomial proportion with success probability p
/// over n trials.
double binomial_sigma(double p, std::uint64_t n);

/// |observed - expected| <= k * sigma(expected, n).
bool within_sigmas(double observed, double expected, std::uint64_t n, double k = 3.0);

/// observed >= bound - k * sigma(bound, n). Lower bounds from the security
/// proofs are checked this way.
bool meets_lower_bound(double observed, double bound, std::uint64_t n, double k = 3.0);

/// Two independent estimates agree within k combined standard deviations.
bool estimates_agree(double a, std::uint64_t na, double b, std::uint64_t nb, double k = 3.0);

}  // namespace pairid
