#pragma once

#include <stdexcept>
#include <string>

namespace haefliger {

enum class ErrorKind {
  IndexOutOfRange,
  AsymmetricEntry,
  InvalidEntry,
  DuplicateIndex,
  InvalidCurve,
  NonGenericProjection,
  CurvesIntersect,
  BandObstructed,
  InvalidParams,
  InconsistentEvent,
  MalformedToken,
  LabelMismatch,
  NonIntegerResult,
  NonRealizable,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// All library failures are reported with this exception; `kind()` lets
/// callers (the CLI in particular) branch on the failure class.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace haefliger
