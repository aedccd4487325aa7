#include "pairid/session/selftest.hpp"

#include "pairid/curve/tate.hpp"
#include "pairid/lab/experiments.hpp"
#include "pairid/session/crosscheck.hpp"
#include "pairid/session/endpoint.hpp"

namespace pairid::session {

namespace {

using algebra::BackendKind;

SelftestItem framing() {
  const auto s = curve::make_suite(BackendKind::Transparent, 11);
  const Bytes want{0, 0, 0, 3, 3, 0, 3};
  const id::Message m{id::MessageType::Challenge, {s.scalar(3)}};
  const Bytes got = frame_encode(message_frame(s, m));
  const bool ok = got == want && frame_message(s, id::SchemeId::SDHID, id::MessageType::Challenge, frame_decode(got), 0) == m;
  return {"framing", ok, to_hex(got)};
}

SelftestItem ddh() {
  const auto s = curve::make_suite(BackendKind::Transparent, 11);
  const auto g = s.g1_generator();
  std::uint64_t wrong = 0;
  for (std::uint64_t a = 0; a < 11; ++a)
    for (std::uint64_t b = 0; b < 11; ++b)
      for (std::uint64_t c = 0; c < 11; ++c) {
        const bool said = algebra::ddh_solve(s, g, s.g1_exp(g, s.scalar(a)), s.g1_exp(g, s.scalar(b)),
                                             s.g1_exp(g, s.scalar(c)));
        wrong += said != ((a * b) % 11 == c);
      }
  return {"ddh-z11", wrong == 0, std::to_string(1331 - wrong) + "/1331 correct"};
}

SelftestItem pairing_order() {
  std::string detail;
  bool ok = true;
  for (const auto& [kind, p] : {std::pair{BackendKind::Transparent, 11ULL}, std::pair{BackendKind::TateCurve, 5ULL},
                                std::pair{BackendKind::TateCurve, 7ULL}}) {
    const auto s = curve::make_suite(kind, p);
    const auto order = algebra::g2_order_bruteforce(s, s.g2_generator());
    ok = ok && order == p;
    detail += algebra::backend_name(kind) + ":" + std::to_string(order) + " ";
  }
  return {"pairing-order", ok, detail};
}

SelftestItem cross_backend() {
  std::uint64_t cases = 0;
  std::uint64_t agree = 0;
  for (std::uint64_t p : {5, 7}) {
    const DlogMap map(p);
    if (!map.bijective()) return {"cross-backend", false, "discrete-log map not bijective at p=" + std::to_string(p)};
    Rng rng(p);
    for (id::SchemeId scheme : id::kAllSchemes) {
      const auto kp = id::keygen(scheme, map.flat(), rng, {.hash_mode = sig::HashMode::Seeded});
      const auto r = cross_backend_sweep(map, kp.pk);
      cases += r.cases;
      agree += r.agreements;
    }
  }
  return {"cross-backend", cases == agree, std::to_string(agree) + "/" + std::to_string(cases) + " agree"};
}

SelftestItem report_item(const std::string& name, const GameReport& r) {
  return {name, r.pass.value_or(false), std::to_string(r.wins) + "/" + std::to_string(r.trials)};
}

SelftestItem loopback() {
  std::uint64_t runs = 0;
  std::uint64_t good = 0;
  for (const auto& [kind, p] : {std::pair{BackendKind::Transparent, 11ULL}, std::pair{BackendKind::TateCurve, 7ULL}}) {
    const auto s = curve::make_suite(kind, p);
    Rng rng(p);
    for (id::SchemeId scheme : id::kAllSchemes) {
      const auto kp = id::keygen(scheme, s, rng);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto run = run_loopback(s, kp, kp.pk, seed);
        const auto [pb, vb] = expected_wire(s, kp, seed);
        ++runs;
        good += run.prover_bytes == pb && run.verifier_bytes == vb && run.verifier.decision.value_or(false);
      }
    }
  }
  return {"loopback", runs == good, std::to_string(good) + "/" + std::to_string(runs) + " byte-identical accepts"};
}

}  // namespace

std::vector<SelftestItem> run_selftest() {
  std::vector<SelftestItem> out;
  out.push_back(framing());
  out.push_back(ddh());
  out.push_back(pairing_order());
  out.push_back(cross_backend());
  out.push_back(report_item("heavy-row-4x4", lab::heavyrow_experiment(4, 4, 16, 16, 100, 1)));
  out.push_back(report_item("invert-ddh-p11", lab::invert_ddh_experiment(curve::make_suite(BackendKind::Transparent, 11),
                                                                         1.0, 100, 1)));
  out.push_back(report_item("owfid-wi-p13", lab::wi_experiment(curve::make_suite(BackendKind::Transparent, 13), 1, 1)));
  out.push_back(loopback());
  return out;
}

}  // namespace pairid::session
