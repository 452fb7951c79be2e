#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbent {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  InvalidArgument,
  SpecMismatch,
  DivisionByZero,
  DegreeNotDividing,
  PrimeMismatch,
  CoordinateOverflow,
  NotRationalInteger,
  ZeroLambda,
  NotAFunctionSpectrum,
  DependentU,
  NotWeaklyRegular,
  TooLarge,
  PreconditionFailed,
  PostVerificationFailed,
  BadDegreePair,
  HNotPlateaued,
  ParseError,
  InternalInvariant,
};

/// Which Construction-1 precondition a recipe violated.
enum class Precondition { Independence, Divisibility, NotWeaklyRegular, DualsLackPU };

std::string_view to_string(Errc code);
std::string_view to_string(Precondition which);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Thrown by the builders when a recipe fails one of its preconditions.
class PreconditionError : public Error {
 public:
  PreconditionError(Precondition which, const std::string& detail);

  Precondition which() const noexcept { return which_; }

 private:
  Precondition which_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace pbent
