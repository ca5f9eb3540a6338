#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanolink {

enum class ErrorCode {
  // usage / parse (exit 1)
  InvalidArgument,
  SyntaxError,
  DegreeError,
  MissingLinkContext,
  // domain (exit 2)
  Overflow,
  ConstantInputs,
  ZeroResultant,
  InvalidGeometry,
  NonIntegralClass,
  NonUnimodular,
  NonIntegralE3,
  NonIntegralGenus,
  NegativeGenus,
  CatalogInconsistent,
  ParityError,
  UnboundedSearch,
  TargetMismatch,
  IncidenceOutOfRange,
  NotDetailed,
  UnknownLink,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `exit_code()` is what the CLI returns.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  int exit_code() const noexcept {
    switch (code_) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::SyntaxError:
      case ErrorCode::DegreeError:
      case ErrorCode::MissingLinkContext:
        return 1;
      default:
        return 2;
    }
  }

 private:
  ErrorCode code_;
};

/// Parse failure with a 0-based character offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fanolink
