#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxideal/space.hpp"

namespace proxideal {

/// Total binary operation on the ground set, row-major.
class OpTable {
 public:
  OpTable() = default;
  OpTable(std::size_t n, std::vector<Point> cells);

  static OpTable from_function(std::size_t n, std::function<Point(Point, Point)> const& f);
  static OpTable modular_add(std::size_t n);
  static OpTable modular_mul(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Point operator()(Point a, Point b) const noexcept { return cells_[a * n_ + b]; }
  std::vector<Point> const& cells() const noexcept { return cells_; }

  friend bool operator==(OpTable const&, OpTable const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Point> cells_;
};

/// Which clause a negative verdict violated and the elements that show it.
struct Witness {
  std::string rule;
  std::vector<Point> points;

  friend bool operator==(Witness const&, Witness const&) = default;
};

/// A boolean verdict; when false, `witness` holds the lexicographically
/// least violating tuple in scan order.
struct Decision {
  bool holds = true;
  Witness witness;

  static Decision yes() { return {}; }
  static Decision no(std::string rule, std::vector<Point> points) {
    return {false, Witness{std::move(rule), std::move(points)}};
  }
  explicit operator bool() const noexcept { return holds; }
};

struct StructureFlags {
  Decision groupoid_add;
  Decision semigroup_add;
  Decision group_add;
  Decision abelian_add;
  Decision groupoid_mul;
  Decision semigroup_mul;
  Decision distributive;
  Decision ring;
  Decision commutative;
  Decision has_unity;
  Decision op_closed;
  Decision upper_closed_add;
  Decision upper_closed_mul;
  // Multiplication associative on the whole ground set; guards the power laws.
  Decision mul_associative;

  std::vector<std::pair<std::string_view, Decision const*>> entries() const;
};

enum class Operation { Add, Mul };

/// Identity elements located inside the upper approximation of the carrier.
struct IdentityInfo {
  Point zero = 0;
  std::optional<Point> one;
  // neg[a] for carrier points a; unset elsewhere.
  std::vector<std::optional<Point>> neg;
};

/// Raw identity search results, kept on the instance so predicates need not
/// repeat the scan. Unlike locate_identities this never throws.
struct IdentityScan {
  Subset zero_candidates;
  Subset one_candidates;
  std::vector<std::optional<Point>> neg;  // relative to the unique zero, when there is one
  Subset units;                           // filled when the unity is unique

  std::optional<Point> zero() const;
  std::optional<Point> one() const;
};

class AlgebraInstance;

struct ProductFactors {
  std::shared_ptr<AlgebraInstance const> left;
  std::shared_ptr<AlgebraInstance const> right;
};

/// A descriptive space with two total operation tables and a carrier.
///
/// Structure flags, identities and power orbits are computed once at
/// construction; the instance is immutable afterwards.
class AlgebraInstance {
 public:
  AlgebraInstance(DescriptiveSpace space, OpTable add, OpTable mul, Subset carrier,
                  std::vector<std::string> names = {});

  /// Z_n with modular tables, the given probe and carrier (default: all of Z_n).
  static AlgebraInstance modular(std::size_t n, DescriptiveSpace space,
                                 std::optional<Subset> carrier = std::nullopt);

  DescriptiveSpace const& space() const noexcept { return space_; }
  OpTable const& add_table() const noexcept { return add_; }
  OpTable const& mul_table() const noexcept { return mul_; }
  std::size_t size() const noexcept { return space_.size(); }
  Point add(Point a, Point b) const noexcept { return add_(a, b); }
  Point mul(Point a, Point b) const noexcept { return mul_(a, b); }

  Subset const& carrier() const noexcept { return carrier_; }
  /// Phi* of the carrier.
  Subset const& upper_carrier() const noexcept { return upper_carrier_; }
  Subset upper(Subset const& s) const { return space_.upper_approx(s); }

  StructureFlags const& flags() const noexcept { return flags_; }
  IdentityScan const& identities() const noexcept { return scan_; }

  /// Left-normed power s^m for 1 <= m <= size().
  Point power(Point s, std::size_t m) const;
  /// Bit mask of { s^m : 1 <= m <= size() }.
  std::uint64_t power_bits(Point s) const noexcept { return power_bits_[s]; }

  std::string const& name(Point p) const;
  std::vector<std::string> const& names() const;
  bool has_custom_names() const noexcept { return !names_.empty(); }

  ProductFactors const* factors() const noexcept { return factors_.get(); }
  void set_factors(ProductFactors factors);

  /// Content hash of probe, tables and carrier (names excluded).
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  std::string fingerprint_hex() const;

 private:
  DescriptiveSpace space_;
  OpTable add_;
  OpTable mul_;
  Subset carrier_;
  Subset upper_carrier_;
  std::vector<std::string> names_;
  StructureFlags flags_;
  IdentityScan scan_;
  std::vector<Point> powers_;  // size() x size(), powers_[s*n + (m-1)] = s^m
  std::vector<std::uint64_t> power_bits_;
  std::shared_ptr<ProductFactors const> factors_;
  std::uint64_t fingerprint_ = 0;
};

StructureFlags analyze_structure(AlgebraInstance const& inst);

/// Throws NoAdditiveIdentity, AmbiguousIdentity (both candidates in the
/// error's points) or MissingInverse(a).
IdentityInfo locate_identities(AlgebraInstance const& inst);

Point power(AlgebraInstance const& inst, Point s, std::size_t n);

/// Throws NoUnity when there is no unity and AmbiguousIdentity when there are several.
Subset units(AlgebraInstance const& inst);

struct Nilpotency {
  bool nilpotent = false;
  std::optional<std::size_t> exponent;  // least m with s^m = 0
};
Nilpotency is_nilpotent(AlgebraInstance const& inst, Point s);

Decision is_irreducible(AlgebraInstance const& inst, Point x);
Decision is_integral_domain(AlgebraInstance const& inst);
Decision upper_closed(AlgebraInstance const& inst, Operation op);

// Throwing accessors shared by the ideal predicates.
Point require_zero(AlgebraInstance const& inst);
Point require_one(AlgebraInstance const& inst);
void require_in_carrier(AlgebraInstance const& inst, Point p);

}  // namespace proxideal
