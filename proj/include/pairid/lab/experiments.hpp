#pragma once

// Ready-made experiments: each runs a game or reduction with scripted
// adversaries, checks the result against the bound it is meant to meet and
// returns a GameReport with `bound` and `pass` filled in. Shared by the CLI
// and the acceptance suite.

#include <cstdint>
#include <vector>

#include "pairid/lab/rewinding.hpp"
#include "pairid/report.hpp"

namespace pairid::lab {

/// CDHID attacker of success `eps` wrapped as a one-more-CDH solver. Passes
/// when the reduction's win rate agrees with the attacker's measured success
/// within 3 combined sigma and no trial used more than q CDH queries.
GameReport omcdh_experiment(const GroupSuite& suite, double eps, std::uint64_t q, std::uint64_t trials,
                            std::uint64_t seed);

/// BLSID attacker of success `eps` with q distinct prover queries turned
/// into a BLS forger. Passes when the collision rate is within 3 sigma of
/// q/2^n and every run that neither collided nor saw the attacker fail
/// produced a valid fresh forgery.
GameReport forgery_experiment(const GroupSuite& suite, unsigned n, std::uint64_t q, double eps,
                              std::uint64_t trials, std::uint64_t seed);

/// CDH through an inverter of accuracy eps; bound eps.
GameReport invert_cdh_experiment(const GroupSuite& suite, double eps, std::uint64_t trials, std::uint64_t seed);

/// DDH through an inverter. With p <= 31 a perfect inverter is first checked
/// against c = ab over all of Z_p^3; then an eps-inverter is run on random
/// DH tuples against the bound eps^4.
GameReport invert_ddh_experiment(const GroupSuite& suite, double eps, std::uint64_t trials, std::uint64_t seed);

/// Exhaustive sweep up to max_rows x max_cols plus `samples` random
/// matrices of size sample_rows x sample_cols. Wins count matrices whose
/// heavy rows hold at least half of the ones.
GameReport heavyrow_experiment(std::size_t max_rows, std::size_t max_cols, std::size_t sample_rows,
                               std::size_t sample_cols, std::uint64_t samples, std::uint64_t seed);

/// Probing strategy against an OWFID attacker of success eps with budgets
/// from a 200-session pilot estimate; bound (1 - 1/e)^2 / 2. The shared
/// commitment and distinct challenges are asserted on every success.
GameReport probe_experiment(const GroupSuite& suite, double eps, std::uint64_t trials, std::uint64_t seed);

/// owfid_inverter on fresh (P, y) per run. Bound 3/16 (iterated) or
/// eps^2/9 (single-shot). e(P, Z) = y is checked on every returned Z.
GameReport extractor_experiment(const GroupSuite& suite, double eps, InverterMode mode, std::uint64_t trials,
                                std::uint64_t seed);

/// Relays `sessions` honest sessions per scheme verbatim and once more with
/// a flipped response bit. Passes when every verbatim relay matches the
/// honest transcript and is accepted, and every tampered one is rejected.
GameReport mitm_experiment(const GroupSuite& suite, std::uint64_t sessions, std::uint64_t seed);

/// Key-less cheating provers against every scheme, one report each: uniform
/// responses (expected rate 1/p) and, for SDHID and SCL, identity
/// responses (expected rate 0).
std::vector<GameReport> soundness_floor_experiment(const GroupSuite& suite, std::uint64_t trials, std::uint64_t seed);

/// For `keys` random OWFID public keys, every accepting transcript
/// (x, m, T, a) has the same number of consistent witnesses under each valid
/// private key. Brute force, so p should stay small.
GameReport wi_experiment(const GroupSuite& suite, std::uint64_t keys, std::uint64_t seed);

}  // namespace pairid::lab
