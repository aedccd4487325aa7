#include "pairid/session/bench.hpp"

#include <chrono>
#include <cstdio>

namespace pairid::session {

CostRow expected_costs(id::SchemeId s) {
  using id::SchemeId;
  switch (s) {
    case SchemeId::BLSID: return {s, 1, 0, 0, 1, {1, 0, 0}, {0, 0, 2}};
    case SchemeId::CDHID: return {s, 2, 0, 0, 0, {1, 0, 0}, {0, 0, 2}};
    case SchemeId::SDHID: return {s, 1, 0, 2, 0, {1, 0, 0}, {2, 0, 1}};
    case SchemeId::OWFID: return {s, 1, 1, 2, 0, {1, 1, 1}, {0, 2, 1}};
    case SchemeId::SCL: return {s, 2, 0, 1, 0, {2, 0, 0}, {1, 0, 1}};
    case SchemeId::HLS: return {s, 1, 1, 1, 0, {2, 1, 0}, {0, 1, 1}};
  }
  fail(Errc::InvalidArgument, "unknown scheme");
}

namespace {

CostRow row_of(id::SchemeId scheme, const algebra::CostCounter& c) {
  return {scheme, c.bandwidth.g1, c.bandwidth.g2, c.bandwidth.zp, c.bandwidth.bits, c.prover, c.verifier};
}

std::string ops(const algebra::OpCounts& o) {
  return std::to_string(o.g1_exp) + "/" + std::to_string(o.g2_exp) + "/" + std::to_string(o.pairings);
}

std::string bandwidth(const CostRow& r) {
  std::string s = std::to_string(r.g1) + " " + std::to_string(r.g2) + " " + std::to_string(r.zp);
  if (r.bits) s += " +" + std::to_string(r.bits) + "*";
  return s;
}

}  // namespace

BenchResult bench_costs(id::SchemeId scheme, const algebra::GroupSuite& suite, std::uint64_t sessions,
                        std::uint64_t seed) {
  if (sessions == 0) fail(Errc::InvalidArgument, "bench needs at least one session");
  const auto start = std::chrono::steady_clock::now();
  Rng key_rng(seed, 0);
  const id::KeyPair kp = id::keygen(scheme, suite, key_rng);

  BenchResult out;
  std::optional<CostRow> clean;
  for (std::uint64_t i = 0; i < sessions; ++i) {
    const id::Transcript t = id::run_session(kp, suite, derive_seed(seed, i));
    ++out.sessions;
    const CostRow row = row_of(scheme, t.costs);
    if (t.redraws > 0) {
      ++out.redraw_sessions;
      if (!out.redraw_costs && (!clean || row != *clean)) out.redraw_costs = row;
      continue;
    }
    if (!clean) {
      clean = row;
      const auto& bw = t.costs.bandwidth;
      out.wire_bytes = bw.bytes_g1 + bw.bytes_g2 + bw.bytes_zp + bw.bytes_bits;
    } else if (row != *clean) {
      fail(Errc::NonDeterministicCosts, id::scheme_name(scheme) + " costs differ between sessions " +
                                            std::to_string(i) + " and the first");
    }
  }
  if (!clean) fail(Errc::NonDeterministicCosts, "every " + id::scheme_name(scheme) + " session redrew");
  if (out.redraw_costs && *out.redraw_costs == *clean) out.redraw_costs.reset();
  out.measured = *clean;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string format_bench(const std::vector<BenchResult>& results) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-7s %-11s %-10s %-9s %-9s %-9s %-9s %-6s %s\n", "scheme", "bw G1 G2 Zp",
                "table", "prover", "table", "verifier", "table", "match", "redraws");
  out += line;
  for (const auto& r : results) {
    const CostRow want = expected_costs(r.measured.scheme);
    std::snprintf(line, sizeof line, "%-7s %-11s %-10s %-9s %-9s %-9s %-9s %-6s %llu/%llu\n",
                  id::scheme_name(r.measured.scheme).c_str(), bandwidth(r.measured).c_str(), bandwidth(want).c_str(),
                  ops(r.measured.prover).c_str(), ops(want.prover).c_str(), ops(r.measured.verifier).c_str(),
                  ops(want.verifier).c_str(), r.matches_table() ? "yes" : "NO",
                  static_cast<unsigned long long>(r.redraw_sessions), static_cast<unsigned long long>(r.sessions));
    out += line;
  }
  out += "ops are G1-exp/G2-exp/pairings per session; +1* is one n-bit challenge string\n";
  return out;
}

}  // namespace pairid::session
