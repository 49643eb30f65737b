#include "resdist/error.hpp"

namespace resdist {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyArray: return "EmptyArray";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonIntegralValency: return "NonIntegralValency";
    case ErrorKind::NegativeIntersectionNumber: return "NegativeIntersectionNumber";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::FirstCNotOne: return "FirstCNotOne";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::StratumOutOfRange: return "StratumOutOfRange";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::PoleEncountered: return "PoleEncountered";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::ParamOutOfDomain: return "ParamOutOfDomain";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace resdist
