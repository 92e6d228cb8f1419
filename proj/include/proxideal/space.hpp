#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "proxideal/subset.hpp"

namespace proxideal {

using FeatureVector = std::vector<std::int64_t>;

/// Finite descriptive space: points 0..n-1 with a probe reading per point.
///
/// Descriptive nearness depends only on which points share a feature
/// vector, so construction groups points into feature classes (numbered by
/// first occurrence) and every query works on class masks.
class DescriptiveSpace {
 public:
  explicit DescriptiveSpace(std::vector<FeatureVector> features);

  static DescriptiveSpace injective(std::size_t n);
  static DescriptiveSpace constant(std::size_t n);
  /// Probe i -> i mod k.
  static DescriptiveSpace modular(std::size_t n, std::size_t k);
  /// One-coordinate probe from a class label per point.
  static DescriptiveSpace from_labels(std::vector<std::int64_t> const& labels);

  std::size_t size() const noexcept { return features_.size(); }
  std::size_t arity() const noexcept { return arity_; }
  FeatureVector const& feature(Point p) const { return features_.at(p); }
  std::vector<FeatureVector> const& features() const noexcept { return features_; }

  std::size_t class_count() const noexcept { return class_members_.size(); }
  std::uint32_t class_of(Point p) const { return class_of_.at(p); }
  /// All points sharing p's feature vector, p included.
  Subset feature_class(Point p) const { return Subset::from_bits(size(), same_class_[p]); }
  bool injective_probe() const noexcept { return class_members_.size() == size(); }

  Subset empty_set() const { return Subset(size()); }
  Subset all() const { return Subset::full(size()); }

  /// { s in A u B : Phi(s) in Phi(A) n Phi(B) }.
  Subset descriptive_intersection(Subset const& a, Subset const& b) const;
  bool near(Subset const& a, Subset const& b) const;
  /// Phi*N = { x : Phi(x) in Phi(N) }.
  Subset upper_approx(Subset const& n) const;

  // Hot-path variant for callers that already hold masks of this space.
  std::uint64_t upper_bits(std::uint64_t bits) const noexcept {
    std::uint64_t out = 0;
    while (bits != 0) {
      out |= same_class_[static_cast<std::size_t>(std::countr_zero(bits))];
      bits &= bits - 1;
    }
    return out;
  }

  /// Space whose probe keeps only the listed coordinates.
  DescriptiveSpace project(std::vector<std::size_t> const& coordinates) const;

  void check_member(Subset const& s) const;

  friend bool operator==(DescriptiveSpace const& a, DescriptiveSpace const& b) {
    return a.features_ == b.features_;
  }

 private:
  std::uint64_t class_image(std::uint64_t bits) const noexcept;

  std::vector<FeatureVector> features_;
  std::size_t arity_ = 0;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint64_t> class_members_;
  std::vector<std::uint64_t> same_class_;
};

enum class RelationOrigin { Derived, UserSupplied };

/// A nearness predicate on pairs of subsets of one space.
///
/// `reference()` is the space whose probe the DP.2 axiom is checked
/// against: the (projected) probe for derived relations, the space the
/// relation was declared on for user relations.
class ProximityRelation {
 public:
  using Predicate = std::function<bool(Subset const&, Subset const&)>;

  /// Relation induced by the probe, optionally restricted to a subset of the
  /// feature coordinates (empty list = all coordinates).
  static ProximityRelation derived(DescriptiveSpace const& space,
                                   std::vector<std::size_t> const& coordinates = {});
  static ProximityRelation user_supplied(DescriptiveSpace const& reference, Predicate predicate);

  bool operator()(Subset const& a, Subset const& b) const { return predicate_(a, b); }
  RelationOrigin origin() const noexcept { return origin_; }
  DescriptiveSpace const& reference() const noexcept { return reference_; }

 private:
  ProximityRelation(DescriptiveSpace reference, Predicate predicate, RelationOrigin origin)
      : reference_(std::move(reference)), predicate_(std::move(predicate)), origin_(origin) {}

  DescriptiveSpace reference_;
  Predicate predicate_;
  RelationOrigin origin_;
};

struct AxiomResult {
  std::string axiom;  // "DP.0" .. "DP.3"
  bool holds = true;
  std::vector<Subset> witness;  // violating pair or triple, empty when holds
};

struct DpReport {
  std::array<AxiomResult, 4> axioms;
  bool exhaustive = true;
  std::uint64_t cases = 0;  // subset tuples examined across all axioms

  bool all_hold() const;
  AxiomResult const& operator[](std::size_t i) const { return axioms.at(i); }
};

struct DpCheckOptions {
  std::size_t exhaustive_bound = 6;
  // Above the bound the check samples this many tuples per axiom; zero
  // makes an oversized space an error instead.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

DpReport check_dp_axioms(ProximityRelation const& relation, DpCheckOptions const& options = {});

}  // namespace proxideal
