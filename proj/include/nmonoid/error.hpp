#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nmonoid {

enum class ErrorKind {
  EmptyInput,
  NonPositiveGenerator,
  GcdNotOne,
  NotAMember,
  OracleTooLarge,
  IndexOutOfRange,
  WTooSmall,
  InvalidArithmetical,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WTooSmall: return "WTooSmall";
    case ErrorKind::InvalidArithmetical: return "InvalidArithmetical";
  }
  return "Unknown";
}

/// Domain error raised by the monoid constructors and operations.
class MonoidError : public std::runtime_error {
 public:
  MonoidError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace nmonoid
