#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proxideal/structures.hpp"

namespace proxideal {

// Approx ideal: nonempty Q in the carrier with neg(a) in Q, a+b in Phi*Q and
// r*a in Phi*Q. Throws EmptySet, NotInCarrier, or the identity errors of
// locate_identities (MissingInverse only for members of Q).
Decision is_approx_ideal(AlgebraInstance const& inst, Subset const& q);

// The predicates below throw NotAnIdeal when their ideal argument fails
// is_approx_ideal.
Decision is_prime(AlgebraInstance const& inst, Subset const& w);
Decision is_primary(AlgebraInstance const& inst, Subset const& w);
Decision is_p_primary(AlgebraInstance const& inst, Subset const& w, Subset const& p);
/// Throws RadicalNotIdeal (with the radical's ideal witness) when r(O) is
/// not an approx ideal.
Decision is_semi_primary(AlgebraInstance const& inst, Subset const& o);
/// Throws NoUnity / AmbiguousIdentity when non-units are undefined.
Decision is_one_absorbing_primary(AlgebraInstance const& inst, Subset const& q);

/// { s in R : s^n in W for some 1 <= n <= |X| }.
Subset radical(AlgebraInstance const& inst, Subset const& w);
/// { l in R : s*l in W }.
Subset colon(AlgebraInstance const& inst, Subset const& w, Point s);
Subset intersect_ideals(AlgebraInstance const& inst, std::vector<Subset> const& ideals);

enum class ZeroTest { Strict, Descriptive };

/// Cosets of a ~ b <=> a + neg(b) in W over the carrier.
///
/// When ~ is not an equivalence the cosets are the classes of its
/// symmetric-transitive closure and `well_defined` is false. Table cells are
/// -1 when a sum or product maps to no coset.
struct QuotientStructure {
  Subset ideal;
  ZeroTest mode = ZeroTest::Descriptive;
  std::vector<Subset> cosets;         // ordered by least member
  std::vector<int> coset_of;          // per point of X, -1 when unmapped
  std::optional<std::size_t> zero_coset;
  std::vector<int> add_table;         // cosets x cosets, row-major
  std::vector<int> mul_table;
  Decision well_defined;

  std::vector<char> zero;                       // per coset
  std::vector<std::optional<Witness>> zero_divisor;  // partner coset and (s, l)
  std::vector<std::optional<std::size_t>> nilpotent_exponent;

  std::size_t coset_count() const noexcept { return cosets.size(); }
  int add(std::size_t a, std::size_t b) const { return add_table.at(a * cosets.size() + b); }
  int mul(std::size_t a, std::size_t b) const { return mul_table.at(a * cosets.size() + b); }
  bool is_zero(std::size_t c) const { return zero.at(c) != 0; }
  bool is_zero_divisor(std::size_t c) const { return zero_divisor.at(c).has_value(); }
  bool is_nilpotent(std::size_t c) const { return nilpotent_exponent.at(c).has_value(); }
  bool tables_total() const;

  /// I/O = { x + O : x in I }, as coset indices.
  std::vector<std::size_t> image(Subset const& i) const;
};

/// Throws NotAnIdeal and the identity errors. Ill-defined quotients are
/// returned flagged, never thrown; call require_well_defined for that.
QuotientStructure quotient(AlgebraInstance const& inst, Subset const& w,
                           ZeroTest mode = ZeroTest::Descriptive);
void require_well_defined(QuotientStructure const& q);

/// The quotient as an instance over the cosets. Each coset's probe reading
/// is the indicator vector of the feature classes met by its members.
/// Requires a well-defined quotient with total tables.
AlgebraInstance quotient_instance(AlgebraInstance const& inst, QuotientStructure const& q);

/// Componentwise product; point (a, b) has index a * |X2| + b and the
/// concatenated probe reading. Throws SizeOverflow past max_points.
AlgebraInstance product_instance(AlgebraInstance const& left, AlgebraInstance const& right,
                                 std::size_t max_points = kMaxPoints);

enum class Verdict { Holds, Fails, NotApplicable };
std::string_view to_string(Verdict v);

struct VerdictEntry {
  Verdict status = Verdict::NotApplicable;
  Witness witness;  // set when Fails, or the reason when NotApplicable

  bool holds() const noexcept { return status == Verdict::Holds; }
};

struct ClassificationReport {
  Subset members;
  VerdictEntry ideal;
  VerdictEntry prime;
  VerdictEntry primary;
  VerdictEntry semi_primary;
  VerdictEntry one_absorbing;
  Subset radical;
  std::optional<Subset> p_primary_target;
};

ClassificationReport classify_ideal(AlgebraInstance const& inst, Subset const& w);

namespace detail {

// Unchecked scans shared with the harness: callers guarantee the argument
// is an approx ideal and the identities they need exist.
Decision ideal_scan(AlgebraInstance const& inst, std::uint64_t q);
Decision prime_scan(AlgebraInstance const& inst, std::uint64_t w);
Decision primary_scan(AlgebraInstance const& inst, std::uint64_t w);
Decision one_absorbing_scan(AlgebraInstance const& inst, std::uint64_t q);
std::uint64_t radical_bits(AlgebraInstance const& inst, std::uint64_t w);
std::uint64_t colon_bits(AlgebraInstance const& inst, std::uint64_t w, Point s);

}  // namespace detail

}  // namespace proxideal
