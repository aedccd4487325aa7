#include "pairid/error.hpp"

namespace pairid {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::MalformedEncoding: return "MalformedEncoding";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::NotInSubgroup: return "NotInSubgroup";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegeneratePairing: return "DegeneratePairing";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::DegenerateSuite: return "DegenerateSuite";
    case Errc::IdentityChallenge: return "IdentityChallenge";
    case Errc::BadChallengeLength: return "BadChallengeLength";
    case Errc::ZeroExponent: return "ZeroExponent";
    case Errc::KeyMismatch: return "KeyMismatch";
    case Errc::ModeBackendMismatch: return "ModeBackendMismatch";
    case Errc::HashFailed: return "HashFailed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::AttackFailed: return "AttackFailed";
    case Errc::FreshnessCollision: return "FreshnessCollision";
    case Errc::ProbeFailed: return "ProbeFailed";
    case Errc::SameWitness: return "SameWitness";
    case Errc::MalformedTranscripts: return "MalformedTranscripts";
    case Errc::InversionFailed: return "InversionFailed";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::ShortFrame: return "ShortFrame";
    case Errc::UnknownTag: return "UnknownTag";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ProtocolViolation: return "ProtocolViolation";
    case Errc::VerifyReject: return "VerifyReject";
    case Errc::TransportClosed: return "TransportClosed";
    case Errc::NonDeterministicCosts: return "NonDeterministicCosts";
    case Errc::BadRecord: return "BadRecord";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pairid
