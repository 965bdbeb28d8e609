#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfx {

enum class ErrorCode {
  NotPrime,
  NoSuchRoot,
  DimensionMismatch,
  NotAssociative,
  UnitAxiomFails,
  NotAnIdeal,
  ImproperIdeal,
  NotASubalgebra,
  NoAntipode,
  NotACoideal,
  NotABimodule,
  NotCentral,
  NotACharacter,
  NotAModule,
  BudgetExceeded,
  DifferentAlgebras,
  BoundExceeded,
  DuplicateRule,
  NotTerminating,
  NotConfluent,
  InfiniteBasis,
  StructureCheckFailed,
  BadParameters,
  NotASubgroup,
  NotAGroup,
  NotAPermutation,
  NotAHopfSubalgebra,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoSuchRoot: return "NoSuchRoot";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::UnitAxiomFails: return "UnitAxiomFails";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::NoAntipode: return "NoAntipode";
    case ErrorCode::NotACoideal: return "NotACoideal";
    case ErrorCode::NotABimodule: return "NotABimodule";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotAModule: return "NotAModule";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DifferentAlgebras: return "DifferentAlgebras";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::NotTerminating: return "NotTerminating";
    case ErrorCode::NotConfluent: return "NotConfluent";
    case ErrorCode::InfiniteBasis: return "InfiniteBasis";
    case ErrorCode::StructureCheckFailed: return "StructureCheckFailed";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotAHopfSubalgebra: return "NotAHopfSubalgebra";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness()` carries the basis
/// indices (or triple, or pair) at which a structural check failed, when
/// there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::vector<std::size_t> witness = {}) {
  throw Error(code, message, std::move(witness));
}

}  // namespace hopfx
