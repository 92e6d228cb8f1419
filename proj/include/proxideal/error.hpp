#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace proxideal {

using Point = std::uint32_t;

enum class ErrorKind {
  MismatchedSpace,
  TooLarge,
  NoAdditiveIdentity,
  AmbiguousIdentity,
  MissingInverse,
  NoUnity,
  NotARing,
  EmptySet,
  NotInCarrier,
  NotAnIdeal,
  RadicalNotIdeal,
  EmptyList,
  NotWellDefined,
  SizeOverflow,
  InfeasibleParams,
  NotClassical,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `points` carries the offending
// elements when there are any (e.g. both candidates of an AmbiguousIdentity).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message, std::vector<Point> points = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<Point> const& points() const noexcept { return points_; }

 private:
  ErrorKind kind_;
  std::vector<Point> points_;
};

}  // namespace proxideal
