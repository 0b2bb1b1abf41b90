#pragma once

#include <stdexcept>
#include <string>

namespace polyknot {

enum class ErrorKind {
  EmptyTable,
  IndexOutOfDimension,
  NotCertified,
  ZeroLinearPart,
  SupportExceedsDim,
  ZeroVector,
  ZeroPolynomial,
  NegativeInput,
  SpaceMismatch,
  Undecidable,
  NotMember,
  BadExponents,
  ParameterBoundViolated,
  OutOfRange,
  CertificationFailed,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : Error(ErrorKind::Parse, what), line_(line), field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace polyknot
