// Command-line front end: key generation, networked identification sessions,
// signatures, the cost benchmark, reduction-lab games and the self-test.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "pairid/curve/tate.hpp"
#include "pairid/id/session.hpp"
#include "pairid/lab/experiments.hpp"
#include "pairid/session/bench.hpp"
#include "pairid/session/endpoint.hpp"
#include "pairid/session/selftest.hpp"
#include "pairid/session/sigfiles.hpp"
#include "pairid/session/transport.hpp"

namespace {

using namespace pairid;
using algebra::BackendKind;
using id::SchemeId;

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

/// Identification scheme names plus the signature aliases bls and bb.
SchemeId scheme_arg(const std::string& name) {
  if (name == "bls") return SchemeId::BLSID;
  if (name == "bb") return SchemeId::SDHID;
  return id::parse_scheme(name);
}

std::uint64_t seed_or_random(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

algebra::GroupSuite suite_arg(const std::string& backend, std::uint64_t p) {
  return curve::make_suite(algebra::parse_backend(backend), p);
}

id::LoadedKey load_key_file(const std::string& path) { return id::load_key(Record::parse(read_file(path))); }

struct NetOptions {
  std::string key_path;
  std::string listen;
  std::string connect;
  bool stdio = false;
  std::string scheme;
  std::optional<std::uint64_t> seed;
  std::string transcript;
  unsigned timeout_ms = 10000;
  unsigned count = 1;
};

std::unique_ptr<session::Transport> open_transport(const NetOptions& o, bool server) {
  const std::chrono::milliseconds timeout(o.timeout_ms);
  if (o.stdio) return std::make_unique<session::FdTransport>(0, 1, timeout);
  if (server) {
    return session::tcp_accept_one(o.listen, timeout, [](unsigned port) {
      std::fprintf(stderr, "listening on port %u\n", port);
    });
  }
  return session::tcp_connect(o.connect, timeout);
}

void report_session(const session::SessionResult& r, const algebra::GroupSuite& suite, const NetOptions& o,
                    unsigned index) {
  // In stdio mode stdout carries frames, so status goes to stderr.
  std::FILE* out = o.stdio ? stderr : stdout;
  const char* verdict = !r.decision ? "none" : (*r.decision ? "accept" : "reject");
  std::fprintf(out, "%s seed=%llu decision=%s%s%s\n", session::describe(r.hello).c_str(),
               static_cast<unsigned long long>(r.transcript.seed), verdict, r.transcript.abort_reason.empty() ? "" : " ",
               r.transcript.abort_reason.c_str());
  if (!o.transcript.empty()) {
    const std::string path = o.count > 1 ? o.transcript + "." + std::to_string(index) : o.transcript;
    write_file(path, id::transcript_record(suite, r.transcript).str());
  }
}

int run_prove(const NetOptions& o) {
  const auto key = load_key_file(o.key_path);
  if (!key.sk) fail(Errc::InvalidArgument, o.key_path + " holds no secret key");
  const SchemeId scheme = o.scheme.empty() ? key.scheme : scheme_arg(o.scheme);
  const id::KeyPair kp{key.scheme, key.pk, *key.sk};
  const std::uint64_t seed = seed_or_random(o.seed);
  int code = kAccept;
  for (unsigned i = 0; i < o.count; ++i) {
    auto transport = open_transport(o, true);
    const auto r = session::serve_prover(key.suite, kp, scheme, *transport, seed + i);
    report_session(r, key.suite, o, i);
    if (!r.decision.value_or(false)) code = kReject;
  }
  return code;
}

int run_verify(const NetOptions& o) {
  const auto key = load_key_file(o.key_path);
  const SchemeId scheme = o.scheme.empty() ? key.scheme : scheme_arg(o.scheme);
  auto transport = open_transport(o, false);
  const auto r = session::run_verifier(key.suite, key.pk, scheme, *transport, seed_or_random(o.seed));
  report_session(r, key.suite, o, 0);
  return r.decision.value_or(false) ? kAccept : kReject;
}

Bytes message_arg(const std::string& hex, const std::string& text, const std::optional<std::uint64_t>& scalar,
                  const algebra::GroupSuite& suite) {
  if (static_cast<int>(!hex.empty()) + static_cast<int>(!text.empty()) + static_cast<int>(scalar.has_value()) != 1) {
    fail(Errc::InvalidArgument, "give exactly one of --message, --text, --scalar");
  }
  if (scalar) return suite.encode(suite.scalar(*scalar));
  if (!text.empty()) return Bytes(text.begin(), text.end());
  return from_hex(hex);
}

int print_report(const GameReport& r) {
  std::fputs(r.to_record().c_str(), stdout);
  return r.pass.value_or(true) ? kAccept : kReject;
}

struct LabOptions {
  std::string game;
  std::string backend = "transparent";
  std::uint64_t p = 101;
  double eps = 0.5;
  std::uint64_t q = 8;
  unsigned n = 4;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  std::string mode = "iterated";
};

int run_lab(const LabOptions& o) {
  auto trials = [&](std::uint64_t dflt) { return o.trials.value_or(dflt); };
  if (o.game == "heavyrow") return print_report(lab::heavyrow_experiment(4, 6, 64, 64, trials(200), o.seed));
  const auto suite = suite_arg(o.backend, o.p);
  if (o.game == "omcdh") return print_report(lab::omcdh_experiment(suite, o.eps, o.q, trials(1000), o.seed));
  if (o.game == "forgery") return print_report(lab::forgery_experiment(suite, o.n, o.q, o.eps, trials(1000), o.seed));
  if (o.game == "invert-cdh") return print_report(lab::invert_cdh_experiment(suite, o.eps, trials(1000), o.seed));
  if (o.game == "invert-ddh") return print_report(lab::invert_ddh_experiment(suite, o.eps, trials(1000), o.seed));
  if (o.game == "probe") return print_report(lab::probe_experiment(suite, o.eps, trials(500), o.seed));
  if (o.game == "extractor") {
    return print_report(
        lab::extractor_experiment(suite, o.eps, lab::parse_inverter_mode(o.mode), trials(500), o.seed));
  }
  if (o.game == "mitm") return print_report(lab::mitm_experiment(suite, trials(20), o.seed));
  if (o.game == "wi") return print_report(lab::wi_experiment(suite, trials(1), o.seed));
  if (o.game == "soundness") {
    int code = kAccept;
    for (const auto& r : lab::soundness_floor_experiment(suite, trials(5000), o.seed)) {
      code = std::max(code, print_report(r));
      std::fputs("\n", stdout);
    }
    return code;
  }
  fail(Errc::InvalidArgument, "unknown game '" + o.game + "'");
}

int run_selftest() {
  bool ok = true;
  for (const auto& item : session::run_selftest()) {
    std::printf("%-4s %-16s %s\n", item.pass ? "ok" : "FAIL", item.name.c_str(), item.detail.c_str());
    ok = ok && item.pass;
  }
  return ok ? kAccept : kReject;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Pairing-based identification schemes: sessions, costs and reduction experiments"};
  app.require_subcommand(1);
  std::function<int()> action;

  // keygen
  auto* keygen = app.add_subcommand("keygen", "generate a key pair file");
  std::string kg_scheme;
  std::string kg_backend = "transparent";
  std::uint64_t kg_p = 1009;
  unsigned kg_n = 0;
  std::string kg_hash;
  std::optional<std::uint64_t> kg_seed;
  std::string kg_out;
  std::string kg_pub;
  keygen->add_option("--scheme", kg_scheme, "blsid|cdhid|sdhid|owfid|scl|hls, or bls|bb")->required();
  keygen->add_option("--backend", kg_backend, "transparent|curve")->capture_default_str();
  keygen->add_option("--p", kg_p, "group order")->capture_default_str();
  keygen->add_option("--n", kg_n, "BLSID challenge bits (0: ceil(log2 p))");
  keygen->add_option("--hash", kg_hash, "BLSID hash: test-vector|seeded|try-and-increment");
  keygen->add_option("--seed", kg_seed);
  keygen->add_option("--out", kg_out, "key file with the secret")->required();
  keygen->add_option("--pub", kg_pub, "also write the public half here");
  keygen->callback([&] {
    action = [&] {
      const auto suite = suite_arg(kg_backend, kg_p);
      Rng rng(seed_or_random(kg_seed));
      id::SchemeParams params{kg_n, {}};
      if (!kg_hash.empty()) params.hash_mode = sig::parse_hash_mode(kg_hash);
      const auto kp = id::keygen(scheme_arg(kg_scheme), suite, rng, params);
      write_file(kg_out, id::key_record(suite, kp, true).str());
      if (!kg_pub.empty()) write_file(kg_pub, id::key_record(suite, kp, false).str());
      std::printf("%s key on %s p=%llu written to %s\n", id::scheme_name(kp.scheme).c_str(),
                  algebra::backend_name(suite.kind()).c_str(), static_cast<unsigned long long>(suite.p()),
                  kg_out.c_str());
      return kAccept;
    };
  });

  // prove / verify
  NetOptions prove_opts;
  auto* prove = app.add_subcommand("prove", "run the prover side of identification sessions");
  prove->add_option("--key", prove_opts.key_path, "key file with the secret")->required();
  auto* listen = prove->add_option("--listen", prove_opts.listen, "host:port to accept on (port 0 picks one)");
  auto* pstdio = prove->add_flag("--stdio", prove_opts.stdio, "frames on stdin/stdout");
  listen->excludes(pstdio);
  prove->add_option("--scheme", prove_opts.scheme, "scheme announced in the hello (default: the key's)");
  prove->add_option("--seed", prove_opts.seed);
  prove->add_option("--transcript", prove_opts.transcript, "write the transcript record here");
  prove->add_option("--timeout", prove_opts.timeout_ms, "per-read timeout in ms")->capture_default_str();
  prove->add_option("--count", prove_opts.count, "sessions to serve, one connection each")->capture_default_str();
  prove->callback([&] {
    if (prove_opts.listen.empty() && !prove_opts.stdio) throw CLI::RequiredError("--listen or --stdio");
    action = [&] { return run_prove(prove_opts); };
  });

  NetOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the verifier side of one identification session");
  verify->add_option("--pk", verify_opts.key_path, "public (or full) key file")->required();
  auto* connect = verify->add_option("--connect", verify_opts.connect, "host:port of the prover");
  auto* vstdio = verify->add_flag("--stdio", verify_opts.stdio, "frames on stdin/stdout");
  connect->excludes(vstdio);
  verify->add_option("--scheme", verify_opts.scheme, "scheme announced in the hello (default: the key's)");
  verify->add_option("--seed", verify_opts.seed);
  verify->add_option("--transcript", verify_opts.transcript, "write the transcript record here");
  verify->add_option("--timeout", verify_opts.timeout_ms, "per-read timeout in ms")->capture_default_str();
  verify->callback([&] {
    if (verify_opts.connect.empty() && !verify_opts.stdio) throw CLI::RequiredError("--connect or --stdio");
    action = [&] { return run_verify(verify_opts); };
  });

  // sign / sigverify
  std::string sig_scheme;
  std::string sig_key;
  std::string sig_hex;
  std::string sig_text;
  std::optional<std::uint64_t> sig_scalar;
  std::string sig_file;
  std::optional<std::uint64_t> sig_seed;
  auto* sign = app.add_subcommand("sign", "sign a message with a BLSID (bls) or SDHID (bb) key file");
  sign->add_option("--scheme", sig_scheme, "bls|bb")->required();
  sign->add_option("--key", sig_key)->required();
  sign->add_option("--message", sig_hex, "message as hex");
  sign->add_option("--text", sig_text, "message as text");
  sign->add_option("--scalar", sig_scalar, "message as an integer mod p (bb)");
  sign->add_option("--out", sig_file, "signature file")->required();
  sign->add_option("--seed", sig_seed);
  sign->callback([&] {
    action = [&] {
      const auto key = load_key_file(sig_key);
      const auto scheme = sig::parse_sig_scheme(sig_scheme);
      Rng rng(seed_or_random(sig_seed));
      const auto sm = session::sign_message(key, scheme, message_arg(sig_hex, sig_text, sig_scalar, key.suite), rng);
      write_file(sig_file, session::signature_record(key.suite, scheme, sm).str());
      std::printf("signature written to %s\n", sig_file.c_str());
      return kAccept;
    };
  });

  auto* sigverify = app.add_subcommand("sigverify", "check a signature file against a key file");
  sigverify->add_option("--scheme", sig_scheme, "bls|bb")->required();
  sigverify->add_option("--pk", sig_key)->required();
  sigverify->add_option("--sig", sig_file)->required();
  sigverify->callback([&] {
    action = [&] {
      const auto key = load_key_file(sig_key);
      const auto scheme = sig::parse_sig_scheme(sig_scheme);
      const auto sm = session::load_signature(Record::parse(read_file(sig_file)), key.suite, scheme);
      const bool ok = session::verify_message(key, scheme, sm);
      std::puts(ok ? "valid" : "invalid");
      return ok ? kAccept : kReject;
    };
  });

  // bench
  std::string bench_scheme;
  bool bench_all = false;
  std::string bench_backend = "transparent";
  std::uint64_t bench_p = 1009;
  std::uint64_t bench_sessions = 100;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "measure per-session costs against the reference cost table");
  auto* bs = bench->add_option("--scheme", bench_scheme);
  auto* ba = bench->add_flag("--all", bench_all, "all six schemes");
  bs->excludes(ba);
  bench->add_option("--backend", bench_backend)->capture_default_str();
  bench->add_option("--p", bench_p)->capture_default_str();
  bench->add_option("--sessions", bench_sessions)->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->callback([&] {
    if (bench_scheme.empty() && !bench_all) throw CLI::RequiredError("--scheme or --all");
    action = [&] {
      const auto suite = suite_arg(bench_backend, bench_p);
      std::vector<session::BenchResult> results;
      if (bench_all) {
        for (SchemeId s : id::kAllSchemes) results.push_back(session::bench_costs(s, suite, bench_sessions, bench_seed));
      } else {
        results.push_back(session::bench_costs(scheme_arg(bench_scheme), suite, bench_sessions, bench_seed));
      }
      std::fputs(session::format_bench(results).c_str(), stdout);
      for (const auto& r : results) {
        if (!r.matches_table()) return kReject;
      }
      return kAccept;
    };
  });

  // lab
  LabOptions lab_opts;
  auto* labcmd = app.add_subcommand("lab", "run a reduction-lab game and print its report");
  labcmd->add_option("--game", lab_opts.game)
      ->required()
      ->check(CLI::IsMember({"omcdh", "forgery", "invert-cdh", "invert-ddh", "heavyrow", "extractor", "mitm", "probe",
                             "soundness", "wi"}));
  labcmd->add_option("--backend", lab_opts.backend)->capture_default_str();
  labcmd->add_option("--p", lab_opts.p)->capture_default_str();
  labcmd->add_option("--eps", lab_opts.eps, "scripted attacker or inverter success")->capture_default_str();
  labcmd->add_option("--q", lab_opts.q, "prover-interaction budget")->capture_default_str();
  labcmd->add_option("--n", lab_opts.n, "hash output bits (forgery)")->capture_default_str();
  labcmd->add_option("--trials", lab_opts.trials);
  labcmd->add_option("--seed", lab_opts.seed)->capture_default_str();
  labcmd->add_option("--mode", lab_opts.mode, "iterated|single-shot (extractor)")->capture_default_str();
  labcmd->callback([&] { action = [&] { return run_lab(lab_opts); }; });

  app.add_subcommand("selftest", "exhaustive checks at small p")->callback([&] { action = run_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == Errc::InvalidArgument ? kUsage : kReject;
  }
}

}  // namespace

int main(int argc, char** argv) {
  // A peer hanging up mid-write should surface as an error, not kill us.
  std::signal(SIGPIPE, SIG_IGN);
  return dispatch(argc, argv);
}
