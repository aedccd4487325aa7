#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairid/id/session.hpp"

namespace pairid::session {

/// Per-session costs of one scheme: element counts on the wire and
/// exponentiations/pairings per role.
struct CostRow {
  id::SchemeId scheme = id::SchemeId::CDHID;
  std::uint64_t g1 = 0;
  std::uint64_t g2 = 0;
  std::uint64_t zp = 0;
  std::uint64_t bits = 0;  // n-bit challenge strings
  algebra::OpCounts prover;
  algebra::OpCounts verifier;

  friend bool operator==(const CostRow&, const CostRow&) = default;
};

/// Reference per-session costs, hard-coded.
CostRow expected_costs(id::SchemeId scheme);

struct BenchResult {
  CostRow measured;
  std::uint64_t sessions = 0;
  /// Sessions in which a redraw fired (SCL verifier, SDHID prover). They
  /// are left out of the consistency check and reported here.
  std::uint64_t redraw_sessions = 0;
  /// Costs of the first redraw session, when one differed from `measured`.
  std::optional<CostRow> redraw_costs;
  std::uint64_t wire_bytes = 0;  // per session, from the element encodings
  double seconds = 0;

  bool matches_table() const { return measured == expected_costs(measured.scheme); }
};

/// Runs `sessions` honest sessions with instrumented counters. Throws
/// NonDeterministicCosts when two sessions without redraws differ, or when
/// every session redrew.
BenchResult bench_costs(id::SchemeId scheme, const algebra::GroupSuite& suite, std::uint64_t sessions,
                        std::uint64_t seed);

/// Measured rows next to the table's rows, with a match column.
std::string format_bench(const std::vector<BenchResult>& results);

}  // namespace pairid::session
