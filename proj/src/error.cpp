#include "pbent/error.hpp"

namespace pbent {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DegreeNotDividing: return "DegreeNotDividing";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::CoordinateOverflow: return "CoordinateOverflow";
    case Errc::NotRationalInteger: return "NotRationalInteger";
    case Errc::ZeroLambda: return "ZeroLambda";
    case Errc::NotAFunctionSpectrum: return "NotAFunctionSpectrum";
    case Errc::DependentU: return "DependentU";
    case Errc::NotWeaklyRegular: return "NotWeaklyRegular";
    case Errc::TooLarge: return "TooLarge";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::PostVerificationFailed: return "PostVerificationFailed";
    case Errc::BadDegreePair: return "BadDegreePair";
    case Errc::HNotPlateaued: return "HNotPlateaued";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

std::string_view to_string(Precondition which) {
  switch (which) {
    case Precondition::Independence: return "Independence";
    case Precondition::Divisibility: return "Divisibility";
    case Precondition::NotWeaklyRegular: return "NotWeaklyRegular";
    case Precondition::DualsLackPU: return "DualsLackPU";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

PreconditionError::PreconditionError(Precondition which, const std::string& detail)
    : Error(Errc::PreconditionFailed, "(" + std::string(to_string(which)) + ") " + detail),
      which_(which) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pbent
