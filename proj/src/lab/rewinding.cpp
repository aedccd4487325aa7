#include "pairid/lab/rewinding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace pairid::lab {

SummaryMatrix::SummaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {
  if (rows == 0 || cols == 0) fail(Errc::InvalidArgument, "summary matrix needs at least one row and column");
}

std::uint64_t SummaryMatrix::row_ones(std::size_t r) const {
  return static_cast<std::uint64_t>(std::count(cells_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                               cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_), 1));
}

std::uint64_t SummaryMatrix::ones() const { return static_cast<std::uint64_t>(std::count(cells_.begin(), cells_.end(), 1)); }

double SummaryMatrix::epsilon() const { return static_cast<double>(ones()) / static_cast<double>(rows_ * cols_); }

SummaryMatrix build_summary(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                            const std::vector<std::uint64_t>& row_seeds, const std::vector<id::Item>& challenges) {
  SummaryMatrix m(row_seeds.size(), challenges.size());
  for (std::size_t r = 0; r < row_seeds.size(); ++r) {
    for (std::size_t c = 0; c < challenges.size(); ++c) {
      m.set(r, c, run_attack(attacker, suite, kp, q, row_seeds[r], challenges[c]).accepted());
    }
  }
  return m;
}

HeavyRowStats heavy_row_stats(const SummaryMatrix& m) {
  HeavyRowStats s;
  const std::uint64_t ones = m.ones();
  s.epsilon = m.epsilon();
  if (ones == 0) return s;
  // Row fraction >= eps/2  <=>  2 * rows * row_ones >= ones.
  std::uint64_t heavy_ones = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::uint64_t k = m.row_ones(r);
    if (2 * m.rows() * k >= ones) {
      ++s.heavy_rows;
      heavy_ones += k;
    }
  }
  s.heavy_mass = static_cast<double>(heavy_ones) / static_cast<double>(ones);
  return s;
}

namespace {

void record(HeavyRowSweep& sweep, std::uint64_t heavy_ones, std::uint64_t ones) {
  ++sweep.matrices;
  const double mass = static_cast<double>(heavy_ones) / static_cast<double>(ones);
  sweep.min_heavy_mass = std::min(sweep.min_heavy_mass, mass);
  if (2 * heavy_ones < ones) ++sweep.violations;
}

}  // namespace

HeavyRowSweep heavy_row_exhaustive(std::size_t max_rows, std::size_t max_cols) {
  if (max_rows * max_cols > 30) fail(Errc::InvalidArgument, "exhaustive heavy-row sweep limited to 30 cells");
  HeavyRowSweep sweep;
  for (std::size_t rows = 1; rows <= max_rows; ++rows) {
    for (std::size_t cols = 1; cols <= max_cols; ++cols) {
      const std::uint64_t row_mask = (1ULL << cols) - 1;
      const std::uint64_t total = 1ULL << (rows * cols);
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        const auto ones = static_cast<std::uint64_t>(std::popcount(bits));
        // eps >= 2/cols  <=>  ones >= 2 * rows.
        if (ones < 2 * rows) continue;
        std::uint64_t heavy = 0;
        for (std::size_t r = 0; r < rows; ++r) {
          const auto k = static_cast<std::uint64_t>(std::popcount((bits >> (r * cols)) & row_mask));
          if (2 * rows * k >= ones) heavy += k;
        }
        record(sweep, heavy, ones);
      }
    }
  }
  return sweep;
}

HeavyRowSweep heavy_row_sampled(std::size_t rows, std::size_t cols, std::uint64_t samples, Rng& rng) {
  HeavyRowSweep sweep;
  const double floor = 2.0 / static_cast<double>(cols);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double eps = floor + (1.0 - floor) * rng.unit();
    SummaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const double density = std::min(1.0, 2.0 * eps * rng.unit());
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.bernoulli(density));
    }
    if (m.epsilon() < floor) continue;
    const std::uint64_t ones = m.ones();
    std::uint64_t heavy = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::uint64_t k = m.row_ones(r);
      if (2 * rows * k >= ones) heavy += k;
    }
    record(sweep, heavy, ones);
  }
  return sweep;
}

ProbeBudget iterated_budget(double eps) {
  if (!(eps > 0) || eps > 1) fail(Errc::InvalidArgument, "attacker success must lie in (0, 1]");
  return {static_cast<std::uint64_t>(std::ceil(1.0 / eps)), static_cast<std::uint64_t>(std::ceil(2.0 / eps))};
}

ProbeResult probe_strategy(AttackerPair& attacker, const GroupSuite& suite, const id::KeyPair& kp, std::uint64_t q,
                           const ProbeBudget& budget, Rng& rng) {
  ProbeResult out;
  std::optional<AttackOutcome> first;
  for (std::uint64_t i = 0; i < budget.step1 && !first; ++i) {
    const std::uint64_t row = rng.next();
    const id::Item ch = random_challenge(suite, kp.pk, rng);
    ++out.probes;
    auto run = run_attack(attacker, suite, kp, q, row, ch);
    if (run.accepted()) first = std::move(run);
  }
  if (!first) fail(Errc::ProbeFailed, "step 1 found no accepting entry in " + std::to_string(budget.step1) + " probes");

  const id::Item& taken = first->transcript.challenge.items.at(0);
  for (std::uint64_t j = 0; j < budget.step2; ++j) {
    id::Item ch = random_challenge(suite, kp.pk, rng);
    while (ch == taken) ch = random_challenge(suite, kp.pk, rng);
    ++out.probes;
    auto run = run_attack(attacker, suite, kp, q, first->transcript.seed, ch);
    if (!run.accepted()) continue;
    if (run.transcript.commitment != first->transcript.commitment) {
      fail(Errc::ProbeFailed, "attacker '" + attacker.name() + "' is not deterministic in its coins");
    }
    out.first = std::move(*first);
    out.second = std::move(run);
    return out;
  }
  fail(Errc::ProbeFailed, "step 2 found no second accepting entry in " + std::to_string(budget.step2) + " probes");
}

namespace {

struct OwfidHistory {
  G2Element x;
  Scalar m;
  G1Element T;
  Scalar a;
};

OwfidHistory owfid_history(const GroupSuite& suite, const id::OwfidPublic& pk, const id::Transcript& t) {
  if (t.scheme != id::SchemeId::OWFID || !t.commitment || !t.response || !t.accepted) {
    fail(Errc::MalformedTranscripts, "extractor needs accepting OWFID transcripts");
  }
  try {
    id::check_layout(id::SchemeId::OWFID, *t.commitment);
    id::check_layout(id::SchemeId::OWFID, t.challenge);
    id::check_layout(id::SchemeId::OWFID, *t.response);
  } catch (const Error& e) {
    fail(Errc::MalformedTranscripts, e.what());
  }
  OwfidHistory h{std::get<G2Element>(t.commitment->items[0]), std::get<Scalar>(t.challenge.items[0]),
                 std::get<G1Element>(t.response->items[0]), std::get<Scalar>(t.response->items[1])};
  if (!id::owfid_verify(suite, pk, h.x, h.m, h.T, h.a)) {
    fail(Errc::MalformedTranscripts, "transcript marked accepting does not verify");
  }
  return h;
}

}  // namespace

G1Element owfid_extractor(const GroupSuite& suite, const id::Transcript& t1, const id::Transcript& t2,
                          const id::OwfidSecret& simkey, const id::OwfidPublic& pk) {
  const GroupSuite plain = suite.uncounted();
  const OwfidHistory h1 = owfid_history(plain, pk, t1);
  const OwfidHistory h2 = owfid_history(plain, pk, t2);
  if (h1.x != h2.x) fail(Errc::MalformedTranscripts, "transcripts have different commitments");
  if (h1.m == h2.m) fail(Errc::MalformedTranscripts, "transcripts have the same challenge");

  const Scalar inv_dm = (h1.m - h2.m).inverse();
  const G1Element Q = plain.g1_exp(plain.g1_div(h1.T, h2.T), inv_dm);
  const Scalar s = (h1.a - h2.a) * inv_dm;
  if (Q == simkey.Q && s == simkey.s) fail(Errc::SameWitness, "extracted key equals the simulation key");
  if (s == simkey.s) fail(Errc::MalformedTranscripts, "extracted key contradicts the simulation key");

  const G1Element Z = plain.g1_exp(plain.g1_div(Q, simkey.Q), (simkey.s - s).inverse());
  if (plain.pairing(pk.P, Z) != pk.y) {
    fail(Errc::InversionFailed, "extracted Z violates e(P, Z) = y; simulation key does not match the public key");
  }
  return Z;
}

std::string inverter_mode_name(InverterMode mode) {
  return mode == InverterMode::Iterated ? "iterated" : "single-shot";
}

InverterMode parse_inverter_mode(const std::string& name) {
  if (name == "iterated") return InverterMode::Iterated;
  if (name == "single-shot") return InverterMode::SingleShot;
  fail(Errc::InvalidArgument, "unknown inverter mode '" + name + "' (iterated or single-shot)");
}

InverterRun owfid_inverter(AttackerPair& attacker, const GroupSuite& suite, const G1Element& P, const G2Element& y,
                           const InverterConfig& config, Rng& rng) {
  const GroupSuite plain = suite.uncounted();
  const double p = static_cast<double>(plain.p());
  if (P == plain.g1_identity()) fail(Errc::InvalidArgument, "P must not be the identity");

  // Simulation key (Q*, s*) with s* drawn from all of Z_p.
  const G1Element Qs = plain.random_g1(rng);
  const Scalar ss = plain.random_scalar(rng);
  const G2Element v = plain.g2_inv(plain.g2_mul(plain.pairing(P, Qs), plain.g2_exp(y, ss)));
  const id::KeyPair sim{id::SchemeId::OWFID, id::OwfidPublic{P, y, v}, id::OwfidSecret{Qs, ss}};

  InverterRun out;
  out.epsilon = config.epsilon > 0 ? config.epsilon
                                   : estimate_success(attacker, plain, sim, config.q, config.pilot_sessions, rng.next());
  if (!(out.epsilon > 2.0 / p)) {
    fail(Errc::InvalidArgument, "attacker success " + std::to_string(out.epsilon) + " does not exceed 2/p");
  }
  if (config.mode == InverterMode::Iterated && plain.p() < 17) {
    fail(Errc::InvalidArgument, "iterated inversion needs p >= 17");
  }
  const ProbeBudget budget =
      config.mode == InverterMode::Iterated ? iterated_budget(out.epsilon) : single_shot_budget();

  ProbeResult probes;
  try {
    probes = probe_strategy(attacker, plain, sim, config.q, budget, rng);
  } catch (const Error& e) {
    if (e.code() != Errc::ProbeFailed) throw;
    fail(Errc::InversionFailed, e.what());
  }
  out.probes = probes.probes;
  try {
    out.Z = owfid_extractor(plain, probes.first.transcript, probes.second.transcript, std::get<id::OwfidSecret>(sim.sk),
                            std::get<id::OwfidPublic>(sim.pk));
  } catch (const Error& e) {
    if (e.code() != Errc::SameWitness) throw;
    fail(Errc::InversionFailed, e.what());
  }
  return out;
}

std::vector<id::OwfidSecret> owfid_valid_keys(const GroupSuite& suite, const id::OwfidPublic& pk) {
  const GroupSuite plain = suite.uncounted();
  std::vector<id::OwfidSecret> keys;
  for (std::uint64_t k = 0; k < plain.p(); ++k) {
    const G1Element Q = plain.g1_pow_uncounted(plain.g1_generator(), plain.scalar(k));
    const G2Element ePQ = plain.pairing(pk.P, Q);
    for (std::uint64_t s = 0; s < plain.p(); ++s) {
      const G2Element lhs = plain.g2_mul(plain.g2_mul(ePQ, plain.g2_exp(pk.y, plain.scalar(s))), pk.v);
      if (lhs == plain.g2_identity()) keys.push_back({Q, plain.scalar(s)});
    }
  }
  return keys;
}

std::vector<std::uint64_t> owfid_witness_counts(const GroupSuite& suite, const id::OwfidPublic& pk,
                                                const G2Element& x, const Scalar& m, const G1Element& T,
                                                const Scalar& a) {
  const GroupSuite plain = suite.uncounted();
  std::vector<std::uint64_t> counts;
  for (const auto& key : owfid_valid_keys(plain, pk)) {
    std::uint64_t n = 0;
    for (std::uint64_t k = 0; k < plain.p(); ++k) {
      const G1Element R = plain.g1_pow_uncounted(plain.g1_generator(), plain.scalar(k));
      for (std::uint64_t rv = 0; rv < plain.p(); ++rv) {
        const id::OwfidWitness w{R, plain.scalar(rv)};
        const auto resp = id::owfid_respond(plain, key, w, m);
        if (resp.T != T || resp.a != a) continue;
        n += id::owfid_commit_with(plain, pk, w).x == x;
      }
    }
    counts.push_back(n);
  }
  return counts;
}

}  // namespace pairid::lab
