#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcode {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  InvalidElement,
  DimensionMismatch,
  ScaleCap,
  NotRref,
  MissingTable,
  MalformedCode,
  NotLinear,
  TooFewWords,
  LengthMismatch,
  NotALattice,
  NotMeetClosed,
  NotJoinClosed,
  UnknownElement,
  NotDistributive,
  NotDisjoint,
  NotClosedUnderIntersection,
  NoDecomposition,
  BlocksNotDisjoint,
  BadParameters,
  ParseError,
  CatalogMismatch,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subcode
