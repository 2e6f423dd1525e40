#include "burneq/error.hpp"

namespace burneq
{

std::string_view kind_name(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::UnknownClassLabel: return "UnknownClassLabel";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::OverlappingPieces: return "OverlappingPieces";
    case ErrorKind::InvalidPiece: return "InvalidPiece";
    case ErrorKind::EmptyOrbitTypeStratum: return "EmptyOrbitTypeStratum";
    case ErrorKind::InfeasibleCoefficient: return "InfeasibleCoefficient";
    case ErrorKind::ZeroDimNegative: return "ZeroDimNegative";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

} // namespace burneq
