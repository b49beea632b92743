#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gralg {

enum class ErrorKind {
  NotAssociative,
  GradingViolation,
  WrongOrder,
  OrderTooLarge,
  UnknownTag,
  UnknownName,
  BadParam,
  SemigroupMismatch,
  DimensionMismatch,
  ParseError,
  NotSemisimple,
  NonSplit,
  PreconditionFailed,
  RadicalNotGraded,
  NilpotentAlgebra,
  DegreeMismatch,
  ResourceLimit,
  EmptySequence,
  TooManyParts,
  UnsupportedAlgebra,
  HypothesisViolated,
  BetaInvalid,
  SizeMismatch,
  NegativeCoordinate,
  QTooSmall,
  Infeasible,
  NoConvergence,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

} // namespace gralg
