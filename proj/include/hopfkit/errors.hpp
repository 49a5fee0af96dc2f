#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

enum class ErrorKind {
  DivisionByZero,
  ConductorOverflow,
  NotDivisible,
  BadDenominator,
  NoSuitablePrime,
  Syntax,
  DimensionMismatch,
  AmbientMismatch,
  NotGroupLike,
  NotCentral,
  IdealMismatch,
  NotRMatrix,
  NotInvertible,
  Nonterminating,
  EscapesBasis,
  UnknownSymbol,
  ConductorMismatch,
  StepLimit,
  BadParameters,
  TooLarge,
  IllPosed,
  Overflow,
  Io,
  ConventionFailure,
  SingularMonodromy,
  IncompleteInput,
  LabelResolution,
  AxiomFailure,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConductorOverflow: return "ConductorOverflow";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::NoSuitablePrime: return "NoSuitablePrime";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotGroupLike: return "NotGroupLike";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::IdealMismatch: return "IdealMismatch";
    case ErrorKind::NotRMatrix: return "NotRMatrix";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Nonterminating: return "Nonterminating";
    case ErrorKind::EscapesBasis: return "EscapesBasis";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::StepLimit: return "StepBoundExceeded";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IllPosed: return "IllPosed";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::ConventionFailure: return "ConventionFailure";
    case ErrorKind::SingularMonodromy: return "SingularMonodromy";
    case ErrorKind::IncompleteInput: return "IncompleteInput";
    case ErrorKind::LabelResolution: return "LabelResolutionFailure";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hopfkit
