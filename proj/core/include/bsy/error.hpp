#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsy {

enum class ErrorKind {
  InvalidArgument,
  PoleAt1,
  PrecisionUnreachable,
  DomainTooSmall,
  NearZeroOrdinate,
  ZeroOnPath,
  BranchAmbiguous,
  Inconsistent,
  OnOrdinate,
  ParseError,
  NotAscending,
  ZeroListInsufficient,
  ToleranceNotMet,
  BetaOutOfRange,
  DegenerateFit,
  Degenerate,
  TableTooLarge,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto its JSON error document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) raise(kind, message);
}

}  // namespace bsy
