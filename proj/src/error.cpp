#include "proxideal/error.hpp"

namespace proxideal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MismatchedSpace: return "MismatchedSpace";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoAdditiveIdentity: return "NoAdditiveIdentity";
    case ErrorKind::AmbiguousIdentity: return "AmbiguousIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NoUnity: return "NoUnity";
    case ErrorKind::NotARing: return "NotARing";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotInCarrier: return "NotInCarrier";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::RadicalNotIdeal: return "RadicalNotIdeal";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::InfeasibleParams: return "InfeasibleParams";
    case ErrorKind::NotClassical: return "NotClassical";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& message, std::vector<Point> points)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      points_(std::move(points)) {}

}  // namespace proxideal
