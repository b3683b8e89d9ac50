#include "sp4cert/error.hpp"

namespace sp4cert {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::BothZero: return "BothZero";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::LongFirstRow: return "LongFirstRow";
    case Errc::ShapeAssertionFailed: return "ShapeAssertionFailed";
    case Errc::MalformedDag: return "MalformedDag";
    case Errc::ParseError: return "ParseError";
    case Errc::DomainError: return "DomainError";
    case Errc::InternalPredicateFailure: return "InternalPredicateFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace sp4cert
