#include "holant/errors.hpp"

namespace holant {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::DanglingPort: return "DanglingPort";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NonBipartite: return "NonBipartite";
    case ErrorKind::NotThreeRegular: return "NotThreeRegular";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::UnfilledSlot: return "UnfilledSlot";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::NoPolyTimeAlgorithmInScope: return "NoPolyTimeAlgorithmInScope";
    case ErrorKind::UnknownGadget: return "UnknownGadget";
    case ErrorKind::InvalidRegion: return "InvalidRegion";
    case ErrorKind::NotCubeRoot: return "NotCubeRoot";
    case ErrorKind::SelectionFailure: return "SelectionFailure";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::NotHard: return "NotHard";
    case ErrorKind::Mod3ViolationAnomaly: return "Mod3ViolationAnomaly";
  }
  return "UnknownError";
}

bool is_parse_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::ZeroDenominator:
    case ErrorKind::MalformedDocument:
    case ErrorKind::DanglingPort:
    case ErrorKind::ArityMismatch:
    case ErrorKind::NonBipartite:
      return true;
    default:
      return false;
  }
}

}  // namespace holant
