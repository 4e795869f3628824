#include "bsy/error.hpp"

namespace bsy {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PoleAt1: return "PoleAt1";
    case ErrorKind::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorKind::DomainTooSmall: return "DomainTooSmall";
    case ErrorKind::NearZeroOrdinate: return "NearZeroOrdinate";
    case ErrorKind::ZeroOnPath: return "ZeroOnPath";
    case ErrorKind::BranchAmbiguous: return "BranchAmbiguous";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::OnOrdinate: return "OnOrdinate";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAscending: return "NotAscending";
    case ErrorKind::ZeroListInsufficient: return "ZeroListInsufficient";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::TableTooLarge: return "TableTooLarge";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace bsy
