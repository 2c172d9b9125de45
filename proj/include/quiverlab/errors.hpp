#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverlab {

enum class ErrorKind {
  DimensionMismatch,
  NotDivisible,
  ZeroCoordinate,
  ParseError,
  LoopPresent,
  TwoCyclePresent,
  BadLabel,
  NotSkewSymmetric,
  BadDirection,
  CyclicQuiver,
  NotTypeA,
  InfiniteLattice,
  QuiverMismatch,
  NotExtOrthogonal,
  HomCycle,
  RecursionUngrounded,
  NotAFace,
  MissingCharacter,
  NoChamber,
  UnsupportedRank,
  SignIncoherent,
  NZViolation,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Kinds that can only fire when an invariant guaranteed by theory is broken,
// i.e. an implementation bug rather than bad input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace quiverlab
