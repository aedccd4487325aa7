// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Sizes and tolerances are the release targets, not the
// faster ones used by the unit suites.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pairid/curve/tate.hpp"
#include "pairid/id/session.hpp"
#include "pairid/lab/experiments.hpp"
#include "pairid/session/bench.hpp"
#include "pairid/session/crosscheck.hpp"
#include "pairid/session/endpoint.hpp"
#include "pairid/session/wire.hpp"

namespace {

using namespace pairid;
using algebra::BackendKind;
using algebra::G1Element;
using algebra::G2Element;
using algebra::GroupSuite;
using id::SchemeId;

struct Outcome {
  bool pass = false;
  std::string detail;
};

GroupSuite transparent(std::uint64_t p) { return curve::make_suite(BackendKind::Transparent, p); }
GroupSuite tate(std::uint64_t p) { return curve::make_suite(BackendKind::TateCurve, p); }

std::string frac(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "/" + std::to_string(b); }

std::string rate(const GameReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s rate %.4f vs %s %.4f", frac(r.wins, r.trials).c_str(), r.advantage(),
                r.bound_label.c_str(), r.bound.value_or(0));
  return buf;
}

Outcome from_report(const GameReport& r) { return {r.pass.value_or(false), rate(r)}; }

Outcome viability() {
  std::uint64_t runs = 0;
  std::uint64_t accepted = 0;
  for (const GroupSuite& s : {transparent(1009), tate(5), tate(7)}) {
    Rng rng(s.p(), 7);
    for (SchemeId scheme : id::kAllSchemes) {
      id::KeyPair kp = id::keygen(scheme, s, rng);
      for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        if (seed % 100 == 0) kp = id::keygen(scheme, s, rng);
        ++runs;
        accepted += id::run_session(kp, s, seed).accepted;
      }
    }
  }
  return {runs == accepted, frac(accepted, runs) + " honest sessions accepted"};
}

Outcome cost_table() {
  // scheme, bandwidth G1 G2 Zp bits, prover G1-exp G2-exp pairings, verifier the same
  struct Row {
    SchemeId scheme;
    std::uint64_t g1, g2, zp, bits, pe1, pe2, pp, ve1, ve2, vp;
  };
  const Row reference[] = {
      {SchemeId::BLSID, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2}, {SchemeId::CDHID, 2, 0, 0, 0, 1, 0, 0, 0, 0, 2},
      {SchemeId::SDHID, 1, 0, 2, 0, 1, 0, 0, 2, 0, 1}, {SchemeId::OWFID, 1, 1, 2, 0, 1, 1, 1, 0, 2, 1},
      {SchemeId::SCL, 2, 0, 1, 0, 2, 0, 0, 1, 0, 1},   {SchemeId::HLS, 1, 1, 1, 0, 2, 1, 0, 0, 1, 1},
  };
  std::uint64_t rows = 0;
  std::uint64_t equal = 0;
  for (const GroupSuite& s : {transparent(1009), tate(131)}) {
    for (const Row& w : reference) {
      const auto m = session::bench_costs(w.scheme, s, 200, 1).measured;
      ++rows;
      equal += m.g1 == w.g1 && m.g2 == w.g2 && m.zp == w.zp && m.bits == w.bits && m.prover.g1_exp == w.pe1 &&
               m.prover.g2_exp == w.pe2 && m.prover.pairings == w.pp && m.verifier.g1_exp == w.ve1 &&
               m.verifier.g2_exp == w.ve2 && m.verifier.pairings == w.vp;
    }
  }
  return {rows == equal, frac(equal, rows) + " measured rows equal the reference costs (both backends)"};
}

Outcome bilinearity() {
  std::uint64_t identities = 0;
  std::uint64_t held = 0;
  for (const GroupSuite& s : {transparent(1009), tate(131)}) {
    Rng rng(s.p(), 3);
    const G1Element g = s.g1_generator();
    const G2Element egg = s.pairing(g, g);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t a = rng.below(s.p());
      const std::uint64_t b = rng.below(s.p());
      const G1Element x = s.random_g1(rng);
      const G1Element y = s.random_g1(rng);
      const G1Element z = s.random_g1(rng);
      // Exponents multiplied as plain integers, independent of Scalar.
      const bool ok = s.pairing(s.g1_exp(g, s.scalar(a)), s.g1_exp(g, s.scalar(b))) ==
                          s.g2_pow_uncounted(egg, s.scalar((a * b) % s.p())) &&
                      s.pairing(s.g1_mul(x, y), z) == s.g2_mul(s.pairing(x, z), s.pairing(y, z)) &&
                      s.pairing(x, y) == s.pairing(y, x);
      ++identities;
      held += ok;
    }
  }
  std::string orders;
  bool order_ok = true;
  for (const GroupSuite& s : {transparent(11), transparent(101), transparent(1009), transparent(10007), tate(5),
                              tate(7), tate(131)}) {
    const auto order = algebra::g2_order_bruteforce(s, s.pairing(s.g1_generator(), s.g1_generator()));
    order_ok = order_ok && order == s.p();
    orders += " " + std::to_string(order);
  }
  return {held == identities && order_ok, frac(held, identities) + " identities; orders of e(g,g):" + orders};
}

Outcome cross_backend() {
  std::uint64_t cases = 0;
  std::uint64_t agree = 0;
  bool bijective = true;
  for (std::uint64_t p : {5, 7}) {
    const session::DlogMap map(p);
    bijective = bijective && map.bijective();
    Rng rng(p, 5);
    for (SchemeId scheme : id::kAllSchemes) {
      for (int k = 0; k < 3; ++k) {
        const auto kp = id::keygen(scheme, map.flat(), rng, {.hash_mode = sig::HashMode::Seeded});
        const auto r = session::cross_backend_sweep(map, kp.pk);
        cases += r.cases;
        agree += r.agreements;
      }
    }
  }
  return {bijective && cases == agree && cases > 0, frac(agree, cases) + " decisions agree at p = 5, 7"};
}

Outcome ddh() {
  const GroupSuite s = transparent(11);
  const G1Element g = s.g1_generator();
  std::uint64_t right = 0;
  for (std::uint64_t a = 0; a < 11; ++a)
    for (std::uint64_t b = 0; b < 11; ++b)
      for (std::uint64_t c = 0; c < 11; ++c) {
        const bool said = algebra::ddh_solve(s, g, s.g1_exp(g, s.scalar(a)), s.g1_exp(g, s.scalar(b)),
                                             s.g1_exp(g, s.scalar(c)));
        right += said == ((a * b) % 11 == c);
      }
  return {right == 1331, frac(right, 1331) + " tuples decided correctly"};
}

Outcome heavy_rows() {
  const auto r = lab::heavyrow_experiment(4, 6, 64, 64, 2000, 1);
  return {r.pass.value_or(false), frac(r.wins, r.trials) + " matrices with heavy-row mass >= 1/2 (" +
                                      std::to_string(r.counts.at("exhaustive_matrices")) + " exhaustive up to 4x6, " +
                                      std::to_string(r.counts.at("sampled_matrices")) + " sampled 64x64)"};
}

Outcome inverter() {
  const auto it = lab::extractor_experiment(transparent(101), 0.5, lab::InverterMode::Iterated, 500, 1);
  const auto ss = lab::extractor_experiment(transparent(101), 0.5, lab::InverterMode::SingleShot, 500, 2);
  return {it.pass.value_or(false) && ss.pass.value_or(false), "iterated " + rate(it) + "; single-shot " + rate(ss)};
}

Outcome omcdh() {
  const auto r = lab::omcdh_experiment(transparent(101), 0.5, 8, 1000, 1);
  return {r.pass.value_or(false), rate(r) + ", max queries " + std::to_string(r.counts.at("max_queries_used")) +
                                      " <= q = 8"};
}

Outcome collisions() {
  const auto r = lab::forgery_experiment(transparent(101), 4, 8, 1.0, 1000, 1);
  const std::uint64_t coll = r.counts.at("collisions");
  const std::uint64_t failed = r.counts.at("failed_attacks");
  return {r.pass.value_or(false),
          "collision rate " + std::to_string(static_cast<double>(coll) / 1000.0).substr(0, 5) + " (target 0.5); " +
              frac(r.wins, r.trials - coll - failed) + " non-colliding forgeries valid"};
}

Outcome invert_ddh() {
  const auto r = lab::invert_ddh_experiment(transparent(11), 0.5, 1000, 1);
  return {r.pass.value_or(false) && r.counts.at("exhaustive_mismatches") == 0,
          "exhaustive " + frac(r.counts.at("exhaustive_cases") - r.counts.at("exhaustive_mismatches"),
                               r.counts.at("exhaustive_cases")) +
              "; " + rate(r)};
}

Outcome soundness() {
  bool ok = true;
  std::string detail;
  for (const auto& r : lab::soundness_floor_experiment(transparent(1009), 5000, 1)) {
    ok = ok && r.pass.value_or(false);
    detail += (detail.empty() ? "" : ", ") + r.game.substr(r.game.find('-') + 1) + " " + std::to_string(r.wins);
  }
  return {ok, "accepts out of 5000 (1/p -> ~5): " + detail};
}

Outcome witness_indistinguishability() {
  const auto r = lab::wi_experiment(transparent(13), 3, 1);
  return {r.pass.value_or(false), frac(r.wins, r.trials) + " accepting transcripts with equal witness counts"};
}

Outcome wire() {
  Rng rng(99);
  std::uint64_t fuzz_ok = 0;
  for (int i = 0; i < 10000; ++i) {
    Bytes payload(rng.below(512));
    for (auto& b : payload) b = static_cast<std::uint8_t>(rng.below(256));
    const session::Frame f{static_cast<session::FrameTag>(1 + rng.below(6)), payload};
    const Bytes enc = session::frame_encode(f);
    fuzz_ok += enc.size() == payload.size() + 5 && enc[4] == static_cast<std::uint8_t>(f.tag) &&
               get_be(ByteView(enc.data(), 4)) == payload.size() + 1 && session::frame_decode(enc) == f;
  }
  std::uint64_t runs = 0;
  std::uint64_t identical = 0;
  for (const GroupSuite& s : {transparent(1009), tate(7), tate(131)}) {
    Rng krng(s.p(), 9);
    for (SchemeId scheme : id::kAllSchemes) {
      const auto kp = id::keygen(scheme, s, krng);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto run = session::run_loopback(s, kp, kp.pk, seed);
        const auto [pb, vb] = session::expected_wire(s, kp, seed);
        ++runs;
        identical += run.prover_bytes == pb && run.verifier_bytes == vb;
      }
    }
  }
  return {fuzz_ok == 10000 && runs == identical,
          frac(fuzz_ok, 10000) + " fuzzed frames; " + frac(identical, runs) + " loopback sessions byte-identical"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"viability", viability},
      {"cost-table", cost_table},
      {"bilinearity", bilinearity},
      {"cross-backend", cross_backend},
      {"ddh-solver", ddh},
      {"heavy-row", heavy_rows},
      {"probe", [] { return from_report(lab::probe_experiment(transparent(101), 0.5, 500, 1)); }},
      {"inverter", inverter},
      {"omcdh-wrapper", omcdh},
      {"hash-collisions", collisions},
      {"invert-to-ddh", invert_ddh},
      {"soundness-floor", soundness},
      {"witness-indist", witness_indistinguishability},
      {"wire", wire},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-16s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
