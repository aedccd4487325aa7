#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pairid {

enum class Errc {
  // algebra
  ZeroInverse,
  MalformedEncoding,
  NotOnCurve,
  NotInSubgroup,
  InvalidArgument,
  // tate-curve
  DegeneratePairing,
  ValidationFailed,
  // id-schemes
  DegenerateSuite,
  IdentityChallenge,
  BadChallengeLength,
  ZeroExponent,
  KeyMismatch,
  // signatures
  ModeBackendMismatch,
  HashFailed,
  BudgetExceeded,
  // reduction-lab
  AttackFailed,
  FreshnessCollision,
  ProbeFailed,
  SameWitness,
  MalformedTranscripts,
  InversionFailed,
  OrderViolation,
  // session-cli
  ShortFrame,
  UnknownTag,
  LengthMismatch,
  ProtocolViolation,
  VerifyReject,
  TransportClosed,
  NonDeterministicCosts,
  BadRecord,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace pairid
