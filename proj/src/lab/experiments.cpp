#include "pairid/lab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "pairid/lab/forgery_reduction.hpp"
#include "pairid/lab/mitm.hpp"
#include "pairid/lab/scripted.hpp"
#include "pairid/stats.hpp"

namespace pairid::lab {

namespace {

using Clock = std::chrono::steady_clock;

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void base_params(GameReport& r, const GroupSuite& suite) {
  r.add_param("backend", algebra::backend_name(suite.kind()));
  r.add_param("p", std::to_string(suite.p()));
}

void finish(GameReport& r, Clock::time_point start) {
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

double rate(std::uint64_t wins, std::uint64_t trials) {
  return trials == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(trials);
}

}  // namespace

GameReport omcdh_experiment(const GroupSuite& suite, double eps, std::uint64_t q, std::uint64_t trials,
                            std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  KnowsKeyAttacker attacker(eps, q);
  Rng key_rng(seed, 0);
  const id::KeyPair kp = id::keygen(id::SchemeId::CDHID, plain, key_rng);
  const double measured = estimate_success(attacker, plain, kp, q, trials, derive_seed(seed, 1));

  CdhidReductionAdversary adversary(attacker);
  GameReport r = om_cdh_game(adversary, plain, {q, trials, derive_seed(seed, 2)});
  r.add_param("eps", num(eps));
  r.add_param("measured_attacker_success", num(measured));
  r.bound_label = "measured attacker success (3 combined sigma)";
  r.bound = measured;
  r.pass = estimates_agree(r.advantage(), r.trials, measured, trials) && r.counts["max_queries_used"] <= q &&
           r.counts["budget_violations"] == 0 && r.counts["order_violations"] == 0;
  finish(r, start);
  return r;
}

GameReport forgery_experiment(const GroupSuite& suite, unsigned n, std::uint64_t q, double eps,
                              std::uint64_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  KnowsKeyAttacker attacker(eps, q);
  BlsidReductionForger forger(attacker, n);
  sig::ForgeryGameConfig config;
  config.max_sign_queries = q;
  config.max_hash_queries = q + 64;
  config.trials = trials;
  config.seed = seed;
  GameReport r = sig::forgery_game(sig::SigScheme::Bls, forger, suite.uncounted(), config);
  r.game = "forgery";
  r.add_param("n", std::to_string(n));
  r.add_param("eps", num(eps));
  r.counts["collisions"] = forger.collisions();
  r.counts["failed_attacks"] = forger.failed_attacks();
  const double expected = std::min(1.0, static_cast<double>(q) / std::ldexp(1.0, static_cast<int>(n)));
  r.bound_label = "collision rate q/2^n (3 sigma)";
  r.bound = expected;
  r.add_param("collision_rate", num(rate(forger.collisions(), r.trials)));
  r.pass = within_sigmas(rate(forger.collisions(), r.trials), expected, r.trials) &&
           r.wins == r.trials - forger.collisions() - forger.failed_attacks();
  finish(r, start);
  return r;
}

GameReport invert_cdh_experiment(const GroupSuite& suite, double eps, std::uint64_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  const Inverter inv = noisy_inverter(plain, eps, derive_seed(seed, 1));
  Rng rng(seed, 0);
  GameReport r;
  r.game = "invert-cdh";
  base_params(r, plain);
  r.add_param("eps", num(eps));
  for (std::uint64_t t = 0; t < trials; ++t) {
    const G1Element g = plain.random_g1_nonidentity(rng);
    const Scalar a = plain.random_scalar(rng);
    const Scalar b = plain.random_scalar(rng);
    const G1Element out = invert_to_cdh(inv, plain, g, plain.g1_exp(g, a), plain.g1_exp(g, b));
    ++r.trials;
    r.wins += out == plain.g1_exp(g, a * b);
  }
  r.bound_label = "eps (3 sigma)";
  r.bound = eps;
  r.pass = meets_lower_bound(r.advantage(), eps, r.trials);
  finish(r, start);
  return r;
}

GameReport invert_ddh_experiment(const GroupSuite& suite, double eps, std::uint64_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  Rng rng(seed, 0);
  GameReport r;
  r.game = "invert-ddh";
  base_params(r, plain);
  r.add_param("eps", num(eps));
  r.counts = {{"exhaustive_cases", 0}, {"exhaustive_mismatches", 0}};

  if (plain.p() <= 31) {
    const Inverter exact = perfect_inverter(plain);
    const G2Element y = plain.g2_generator();
    for (std::uint64_t a = 0; a < plain.p(); ++a) {
      for (std::uint64_t b = 0; b < plain.p(); ++b) {
        for (std::uint64_t c = 0; c < plain.p(); ++c) {
          const bool said = invert_to_ddh(exact, plain, y, plain.g2_exp(y, plain.scalar(a)),
                                          plain.g2_exp(y, plain.scalar(b)), plain.g2_exp(y, plain.scalar(c)), rng);
          ++r.counts["exhaustive_cases"];
          r.counts["exhaustive_mismatches"] += said != (plain.scalar(a) * plain.scalar(b) == plain.scalar(c));
        }
      }
    }
  }

  const Inverter inv = noisy_inverter(plain, eps, derive_seed(seed, 1));
  for (std::uint64_t t = 0; t < trials; ++t) {
    const G2Element y = plain.g2_exp(plain.g2_generator(), plain.random_nonzero_scalar(rng));
    const Scalar a = plain.random_scalar(rng);
    const Scalar b = plain.random_scalar(rng);
    const bool said = invert_to_ddh(inv, plain, y, plain.g2_exp(y, a), plain.g2_exp(y, b), plain.g2_exp(y, a * b), rng);
    ++r.trials;
    r.wins += said;
  }
  const double bound = std::pow(eps, 4);
  r.bound_label = "eps^4 on DH tuples (3 sigma)";
  r.bound = bound;
  r.pass = r.counts["exhaustive_mismatches"] == 0 && meets_lower_bound(r.advantage(), bound, r.trials);
  finish(r, start);
  return r;
}

GameReport heavyrow_experiment(std::size_t max_rows, std::size_t max_cols, std::size_t sample_rows,
                               std::size_t sample_cols, std::uint64_t samples, std::uint64_t seed) {
  const auto start = Clock::now();
  GameReport r;
  r.game = "heavyrow";
  r.add_param("exhaustive", std::to_string(max_rows) + "x" + std::to_string(max_cols));
  r.add_param("sampled", std::to_string(sample_rows) + "x" + std::to_string(sample_cols));
  const HeavyRowSweep ex = heavy_row_exhaustive(max_rows, max_cols);
  Rng rng(seed, 0);
  const HeavyRowSweep sm = heavy_row_sampled(sample_rows, sample_cols, samples, rng);
  r.trials = ex.matrices + sm.matrices;
  r.wins = r.trials - ex.violations - sm.violations;
  r.counts = {{"exhaustive_matrices", ex.matrices},
              {"exhaustive_violations", ex.violations},
              {"sampled_matrices", sm.matrices},
              {"sampled_violations", sm.violations}};
  r.add_param("min_heavy_mass", num(std::min(ex.min_heavy_mass, sm.min_heavy_mass)));
  r.bound_label = "heavy-row share of ones in every matrix";
  r.bound = 0.5;
  r.pass = r.wins == r.trials;
  finish(r, start);
  return r;
}

GameReport probe_experiment(const GroupSuite& suite, double eps, std::uint64_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  const std::uint64_t q = 4;
  KnowsKeyAttacker attacker(eps, q);
  Rng key_rng(seed, 0);
  const id::KeyPair kp = id::keygen(id::SchemeId::OWFID, plain, key_rng);
  const double measured = estimate_success(attacker, plain, kp, q, 200, derive_seed(seed, 1));
  const ProbeBudget budget = iterated_budget(measured);

  GameReport r;
  r.game = "probe";
  base_params(r, plain);
  r.add_param("eps", num(eps));
  r.add_param("pilot_eps", num(measured));
  r.add_param("budget", std::to_string(budget.step1) + "+" + std::to_string(budget.step2));
  r.counts = {{"probe_failed", 0}, {"postcondition_failures", 0}, {"probes", 0}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 2), t);
    ++r.trials;
    try {
      const ProbeResult res = probe_strategy(attacker, plain, kp, q, budget, rng);
      r.counts["probes"] += res.probes;
      const bool ok = res.first.accepted() && res.second.accepted() &&
                      res.first.transcript.commitment == res.second.transcript.commitment &&
                      res.first.transcript.challenge != res.second.transcript.challenge;
      if (ok) {
        ++r.wins;
      } else {
        ++r.counts["postcondition_failures"];
      }
    } catch (const Error& e) {
      if (e.code() != Errc::ProbeFailed) throw;
      ++r.counts["probe_failed"];
    }
  }
  const double bound = 0.5 * std::pow(1.0 - std::exp(-1.0), 2);
  r.bound_label = "(1 - 1/e)^2 / 2 (3 sigma)";
  r.bound = bound;
  r.pass = r.counts["postcondition_failures"] == 0 && meets_lower_bound(r.advantage(), bound, r.trials);
  finish(r, start);
  return r;
}

GameReport extractor_experiment(const GroupSuite& suite, double eps, InverterMode mode, std::uint64_t trials,
                                std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  KnowsKeyAttacker attacker(eps, 4);
  InverterConfig config;
  config.mode = mode;

  GameReport r;
  r.game = "extractor";
  base_params(r, plain);
  r.add_param("mode", inverter_mode_name(mode));
  r.add_param("eps", num(eps));
  r.counts = {{"inversion_failed", 0}, {"bad_extractions", 0}, {"probes", 0}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    const G1Element P = plain.random_g1_nonidentity(rng);
    const G2Element y = plain.g2_exp(plain.g2_generator(), plain.random_nonzero_scalar(rng));
    ++r.trials;
    try {
      const InverterRun run = owfid_inverter(attacker, plain, P, y, config, rng);
      r.counts["probes"] += run.probes;
      if (plain.pairing(P, run.Z) == y) {
        ++r.wins;
      } else {
        ++r.counts["bad_extractions"];
      }
    } catch (const Error& e) {
      if (e.code() != Errc::InversionFailed) throw;
      ++r.counts["inversion_failed"];
    }
  }
  const double bound = mode == InverterMode::Iterated ? 3.0 / 16.0 : eps * eps / 9.0;
  r.bound_label = mode == InverterMode::Iterated ? "3/16 (3 sigma)" : "eps^2/9 (3 sigma)";
  r.bound = bound;
  r.pass = r.counts["bad_extractions"] == 0 && meets_lower_bound(r.advantage(), bound, r.trials);
  finish(r, start);
  return r;
}

GameReport mitm_experiment(const GroupSuite& suite, std::uint64_t sessions, std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  GameReport r;
  r.game = "mitm";
  base_params(r, plain);
  r.counts = {{"tampered", 0}, {"tamper_rejected", 0}};
  Rng rng(seed, 0);
  for (id::SchemeId scheme : id::kAllSchemes) {
    const id::KeyPair kp = id::keygen(scheme, plain, rng);
    for (std::uint64_t i = 0; i < sessions; ++i) {
      const std::uint64_t s = rng.next();
      const MitmReport clean = mitm_relay_demo(plain, kp, s);
      ++r.trials;
      r.wins += clean.identical && clean.relayed.accepted;
      const MitmReport dirty = mitm_relay_demo(plain, kp, s, rng.next());
      ++r.counts["tampered"];
      r.counts["tamper_rejected"] += !dirty.relayed.accepted;
    }
  }
  r.add_param("note", mitm_relay_demo(plain, id::keygen(id::SchemeId::CDHID, plain, rng), 0).note);
  r.bound_label = "every verbatim relay accepted and identical to the honest session";
  r.bound = 1.0;
  r.pass = r.wins == r.trials && r.counts["tamper_rejected"] == r.counts["tampered"];
  finish(r, start);
  return r;
}

std::vector<GameReport> soundness_floor_experiment(const GroupSuite& suite, std::uint64_t trials, std::uint64_t seed) {
  const GroupSuite plain = suite.uncounted();
  std::vector<GameReport> out;
  Rng key_rng(seed, 0);
  auto run = [&](id::SchemeId scheme, const id::KeyPair& kp, bool identity) {
    const auto start = Clock::now();
    RandomResponder attacker(identity);
    GameReport r;
    r.game = std::string(identity ? "soundness-identity-" : "soundness-") + id::scheme_name(scheme);
    base_params(r, plain);
    Rng rows(derive_seed(seed, static_cast<std::uint64_t>(scheme)), identity ? 2 : 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
      ++r.trials;
      r.wins += run_attack(attacker, plain, kp, 0, rows.next()).accepted();
    }
    if (identity) {
      r.bound_label = "exactly 0";
      r.bound = 0.0;
      r.pass = r.wins == 0;
    } else {
      const double expected = 1.0 / static_cast<double>(plain.p());
      r.bound_label = "1/p (3 sigma)";
      r.bound = expected;
      r.pass = within_sigmas(r.advantage(), expected, r.trials);
    }
    finish(r, start);
    out.push_back(std::move(r));
  };
  for (id::SchemeId scheme : id::kAllSchemes) {
    const id::KeyPair kp = id::keygen(scheme, plain, key_rng);
    run(scheme, kp, false);
    if (scheme == id::SchemeId::SDHID || scheme == id::SchemeId::SCL) run(scheme, kp, true);
  }
  return out;
}

GameReport wi_experiment(const GroupSuite& suite, std::uint64_t keys, std::uint64_t seed) {
  const auto start = Clock::now();
  const GroupSuite plain = suite.uncounted();
  GameReport r;
  r.game = "wi";
  base_params(r, plain);
  r.add_param("keys", std::to_string(keys));
  r.counts = {{"valid_keys", 0}, {"unequal", 0}, {"no_witness", 0}};
  Rng rng(seed, 0);
  const std::uint64_t p = plain.p();
  for (std::uint64_t k = 0; k < keys; ++k) {
    const id::KeyPair kp = id::keygen(id::SchemeId::OWFID, plain, rng);
    const auto& pk = std::get<id::OwfidPublic>(kp.pk);
    r.counts["valid_keys"] += owfid_valid_keys(plain, pk).size();
    // Each (m, T, a) fixes the one commitment x it is accepting for.
    for (std::uint64_t m = 1; m < p; ++m) {
      for (std::uint64_t ti = 0; ti < p; ++ti) {
        const G1Element T = plain.g1_pow_uncounted(plain.g1_generator(), plain.scalar(ti));
        for (std::uint64_t a = 0; a < p; ++a) {
          const Scalar ms = plain.scalar(m);
          const Scalar as = plain.scalar(a);
          const G2Element x = plain.g2_mul(plain.g2_mul(plain.pairing(pk.P, T), plain.g2_exp(pk.y, as)),
                                           plain.g2_exp(pk.v, ms));
          const auto counts = owfid_witness_counts(plain, pk, x, ms, T, as);
          ++r.trials;
          bool equal = !counts.empty();
          for (std::uint64_t c : counts) equal = equal && c == counts.front();
          if (!counts.empty() && counts.front() == 0) ++r.counts["no_witness"];
          if (equal && counts.front() > 0) {
            ++r.wins;
          } else {
            ++r.counts["unequal"];
          }
        }
      }
    }
  }
  r.bound_label = "equal witness counts under every valid key";
  r.bound = 1.0;
  r.pass = r.trials > 0 && r.wins == r.trials;
  finish(r, start);
  return r;
}

}  // namespace pairid::lab
