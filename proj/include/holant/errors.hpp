#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holant {

enum class ErrorKind {
  Syntax,
  ZeroDenominator,
  DivisionByZero,
  UnboundVariable,
  NonSquare,
  ZeroDivisor,
  MalformedDocument,
  DanglingPort,
  ArityMismatch,
  NonBipartite,
  NotThreeRegular,
  NotSymmetric,
  UnfilledSlot,
  CaseMismatch,
  NoPolyTimeAlgorithmInScope,
  UnknownGadget,
  InvalidRegion,
  NotCubeRoot,
  SelectionFailure,
  SingularSystem,
  PreconditionViolation,
  NotHard,
  Mod3ViolationAnomaly,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input could not be read (grammar, document shape, wiring).
bool is_parse_error(ErrorKind kind);

}  // namespace holant
