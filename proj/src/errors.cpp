#include "quiverlab/errors.hpp"

namespace quiverlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LoopPresent: return "LoopPresent";
    case ErrorKind::TwoCyclePresent: return "TwoCyclePresent";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorKind::BadDirection: return "BadDirection";
    case ErrorKind::CyclicQuiver: return "CyclicQuiver";
    case ErrorKind::NotTypeA: return "NotTypeA";
    case ErrorKind::InfiniteLattice: return "InfiniteLattice";
    case ErrorKind::QuiverMismatch: return "QuiverMismatch";
    case ErrorKind::NotExtOrthogonal: return "NotExtOrthogonal";
    case ErrorKind::HomCycle: return "HomCycle";
    case ErrorKind::RecursionUngrounded: return "RecursionUngrounded";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::MissingCharacter: return "MissingCharacter";
    case ErrorKind::NoChamber: return "NoChamber";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::SignIncoherent: return "SignIncoherent";
    case ErrorKind::NZViolation: return "NZViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible:
    case ErrorKind::HomCycle:
    case ErrorKind::NoChamber:
    case ErrorKind::SignIncoherent:
    case ErrorKind::NZViolation:
    case ErrorKind::Internal:
      return true;
    default:
      return false;
  }
}

}  // namespace quiverlab
