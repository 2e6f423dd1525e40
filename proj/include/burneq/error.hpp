#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burneq
{

/// Every failure the library reports carries one of these codes so that
/// front ends can map them to exit statuses without string matching.
enum class ErrorKind
{
  // group_core
  EmptyGeneratorList,
  OrderCapExceeded,
  InvalidPermutation,
  NotASubgroup,
  // burnside
  NonIntegralSolution,
  InvalidAction,
  GroupMismatch,
  UnknownClassLabel,
  // representation
  NotOrthogonal,
  NotAHomomorphism,
  DimensionMismatch,
  // equivariant_degree
  SingularJacobian,
  OverlappingPieces,
  InvalidPiece,
  // realization
  EmptyOrbitTypeStratum,
  InfeasibleCoefficient,
  ZeroDimNegative,
  // map_expr
  SyntaxError,
  UnknownVariable,
  BadExponent,
  DivisionByZero,
  // io
  InvalidInput,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &message)
  : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
    _kind(kind),
    _detail(message)
  {}

  ErrorKind kind() const
  { return _kind; }

  /// Message without the kind prefix.
  std::string const &detail() const
  { return _detail; }

private:
  ErrorKind _kind;
  std::string _detail;
};

} // namespace burneq
