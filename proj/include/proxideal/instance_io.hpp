#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxideal/structures.hpp"

namespace proxideal {

/// One instance file: the instance, its label and the ideals named in it.
struct InstanceDocument {
  std::string label;
  AlgebraInstance instance;
  std::vector<std::pair<std::string, Subset>> ideals;

  /// Throws InvalidArgument listing the known names when `name` is absent.
  Subset const& ideal(std::string_view name) const;
  /// Throws InvalidArgument when no point carries `name`.
  Point point(std::string_view name) const;
};

/// Parses the line-based instance format (see docs/instance_format.md).
/// Throws ParseError for grammar problems and ValidationError for semantic
/// ones, both citing the line; TooLarge when the point count exceeds
/// `max_points`.
InstanceDocument parse_instance(std::string_view text, std::size_t max_points = kMaxPoints);
InstanceDocument load_instance(std::string const& path, std::size_t max_points = kMaxPoints);

/// Canonical rendering; parse_instance(serialize_instance(d)) reproduces d.
std::string serialize_instance(InstanceDocument const& doc);

/// Document for an instance with every enumerated ideal named "W" followed
/// by its member names.
InstanceDocument document_with_ideals(std::string label, AlgebraInstance const& inst);

}  // namespace proxideal
