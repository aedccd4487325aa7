#pragma once

#include <cstdint>
#include <vector>

#include "pairid/lab/attack.hpp"

namespace pairid::lab {

/// Outcomes of an attacker: rows are coin seeds, columns verifier
/// challenges, entries accept (true) or reject.
class SummaryMatrix {
 public:
  SummaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { cells_[r * cols_ + c] = v; }
  std::uint64_t row_ones(std::size_t r) const;
  std::uint64_t ones() const;
  /// Fraction of ones.
  double epsilon() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> cells_;
};

/// Fills a matrix by replaying the attacker for every (row seed, challenge).
SummaryMatrix build_summary(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                            const std::vector<std::uint64_t>& row_seeds, const std::vector<id::Item>& challenges);

struct HeavyRowStats {
  double epsilon = 0;
  std::size_t heavy_rows = 0;
  /// Share of the ones lying in rows whose own fraction is >= epsilon/2.
  /// 1 for a matrix without ones.
  double heavy_mass = 1;
};

HeavyRowStats heavy_row_stats(const SummaryMatrix& m);

struct HeavyRowSweep {
  std::uint64_t matrices = 0;  // matrices with epsilon >= 2/cols
  double min_heavy_mass = 1;
  std::uint64_t violations = 0;  // heavy mass < 1/2
};

/// Every boolean matrix of every size up to max_rows x max_cols
/// (max_rows * max_cols <= 30).
HeavyRowSweep heavy_row_exhaustive(std::size_t max_rows, std::size_t max_cols);
/// Random matrices of the given size with densities spread over
/// [2/cols, 1]; the row densities vary so heavy and light rows both occur.
HeavyRowSweep heavy_row_sampled(std::size_t rows, std::size_t cols, std::uint64_t samples, Rng& rng);

/// Probe budgets of the two steps.
struct ProbeBudget {
  std::uint64_t step1 = 1;
  std::uint64_t step2 = 1;
};
/// ceil(1/eps), ceil(2/eps).
ProbeBudget iterated_budget(double eps);
inline ProbeBudget single_shot_budget() { return {1, 1}; }

struct ProbeResult {
  AttackOutcome first;
  AttackOutcome second;
  std::uint64_t probes = 0;
};

/// Step 1 probes random (row, challenge) entries until one accepts; step 2
/// probes further challenges along that row until a second one accepts.
/// The two transcripts share the row seed (hence the commitment) and
/// differ in the challenge. Throws ProbeFailed once a budget is spent.
ProbeResult probe_strategy(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                           const ProbeBudget& budget, Rng& rng);

/// Computes Q = (T/T')^(1/(m-m')), s = (a-a')/(m-m') and returns
/// Z = (Q/Q*)^(1/(s*-s)), which satisfies e(P, Z) = y. Throws SameWitness
/// when (Q, s) = (Q*, s*) and MalformedTranscripts unless both transcripts
/// are accepting OWFID transcripts with equal commitment and distinct
/// challenges.
G1Element owfid_extractor(const GroupSuite& suite, const id::Transcript& t1, const id::Transcript& t2,
                          const id::OwfidSecret& simkey, const id::OwfidPublic& pk);

enum class InverterMode { Iterated, SingleShot };

std::string inverter_mode_name(InverterMode mode);
InverterMode parse_inverter_mode(const std::string& name);

struct InverterConfig {
  InverterMode mode = InverterMode::Iterated;
  std::uint64_t q = 4;  // prover interactions granted to B
  /// Attacker success; estimated from `pilot_sessions` honest runs when 0.
  double epsilon = 0;
  std::uint64_t pilot_sessions = 200;
};

struct InverterRun {
  G1Element Z;
  double epsilon = 0;
  std::uint64_t probes = 0;
};

/// Inverts the pairing at (P, y) with an OWFID attacker: simulates the
/// protocol under a random key (Q*, s*), rewinds the attacker with the
/// probing strategy and extracts. Iterated mode requires p >= 17 and
/// eps > 2/p, single-shot eps > 2/p (InvalidArgument). Throws
/// InversionFailed when probing fails or the extracted key is the
/// simulation key; a returned Z always satisfies e(P, Z) = y.
InverterRun owfid_inverter(AttackerPair& attacker, const GroupSuite& suite, const G1Element& P, const G2Element& y,
                           const InverterConfig& config, Rng& rng);

/// For one OWFID transcript (x, m, T, a): the number of witnesses (R, r)
/// consistent with it under each valid private key of `pk`, by brute force
/// over G1 x Z_p. Entries follow the key enumeration order.
std::vector<std::uint64_t> owfid_witness_counts(const GroupSuite& suite, const id::OwfidPublic& pk,
                                                const G2Element& x, const Scalar& m, const G1Element& T,
                                                const Scalar& a);

/// Every private key (Q, s) with e(P,Q) y^s v = 1, by brute force.
std::vector<id::OwfidSecret> owfid_valid_keys(const GroupSuite& suite, const id::OwfidPublic& pk);

}  // namespace pairid::lab
