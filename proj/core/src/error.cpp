#include "gralg/error.hpp"

namespace gralg {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::NotAssociative: return "NotAssociative";
  case ErrorKind::GradingViolation: return "GradingViolation";
  case ErrorKind::WrongOrder: return "WrongOrder";
  case ErrorKind::OrderTooLarge: return "OrderTooLarge";
  case ErrorKind::UnknownTag: return "UnknownTag";
  case ErrorKind::UnknownName: return "UnknownName";
  case ErrorKind::BadParam: return "BadParam";
  case ErrorKind::SemigroupMismatch: return "SemigroupMismatch";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::NotSemisimple: return "NotSemisimple";
  case ErrorKind::NonSplit: return "NonSplit";
  case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  case ErrorKind::RadicalNotGraded: return "RadicalNotGraded";
  case ErrorKind::NilpotentAlgebra: return "NilpotentAlgebra";
  case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  case ErrorKind::ResourceLimit: return "ResourceLimit";
  case ErrorKind::EmptySequence: return "EmptySequence";
  case ErrorKind::TooManyParts: return "TooManyParts";
  case ErrorKind::UnsupportedAlgebra: return "UnsupportedAlgebra";
  case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  case ErrorKind::BetaInvalid: return "BetaInvalid";
  case ErrorKind::SizeMismatch: return "SizeMismatch";
  case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
  case ErrorKind::QTooSmall: return "QTooSmall";
  case ErrorKind::Infeasible: return "Infeasible";
  case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
  : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message)
{
}

void raise(ErrorKind kind, const std::string& message)
{
  throw Error(kind, message);
}

} // namespace gralg
