#include "proxideal/space.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

#include "proxideal/random.hpp"

namespace proxideal {

DescriptiveSpace::DescriptiveSpace(std::vector<FeatureVector> features)
    : features_(std::move(features)) {
  if (features_.empty()) {
    throw Error(ErrorKind::ValidationError, "a descriptive space needs at least one point");
  }
  if (features_.size() > kMaxPoints) {
    throw Error(ErrorKind::SizeOverflow, std::to_string(features_.size()) +
                                             " points exceed the limit of " +
                                             std::to_string(kMaxPoints));
  }
  arity_ = features_.front().size();
  std::map<FeatureVector, std::uint32_t> index;
  class_of_.reserve(features_.size());
  for (std::size_t p = 0; p < features_.size(); ++p) {
    if (features_[p].size() != arity_) {
      throw Error(ErrorKind::ValidationError,
                  "point " + std::to_string(p) + " has " + std::to_string(features_[p].size()) +
                      " feature values, expected " + std::to_string(arity_),
                  {static_cast<Point>(p)});
    }
    auto [it, inserted] =
        index.try_emplace(features_[p], static_cast<std::uint32_t>(class_members_.size()));
    if (inserted) class_members_.push_back(0);
    class_of_.push_back(it->second);
    class_members_[it->second] |= std::uint64_t{1} << p;
  }
  same_class_.reserve(features_.size());
  for (std::uint32_t c : class_of_) same_class_.push_back(class_members_[c]);
}

DescriptiveSpace DescriptiveSpace::injective(std::size_t n) {
  std::vector<FeatureVector> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back({static_cast<std::int64_t>(i)});
  return DescriptiveSpace(std::move(f));
}

DescriptiveSpace DescriptiveSpace::constant(std::size_t n) {
  return DescriptiveSpace(std::vector<FeatureVector>(n, FeatureVector{0}));
}

DescriptiveSpace DescriptiveSpace::modular(std::size_t n, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "probe modulus must be positive");
  std::vector<FeatureVector> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back({static_cast<std::int64_t>(i % k)});
  return DescriptiveSpace(std::move(f));
}

DescriptiveSpace DescriptiveSpace::from_labels(std::vector<std::int64_t> const& labels) {
  std::vector<FeatureVector> f;
  f.reserve(labels.size());
  for (auto v : labels) f.push_back({v});
  return DescriptiveSpace(std::move(f));
}

void DescriptiveSpace::check_member(Subset const& s) const {
  if (s.universe() != size()) {
    throw Error(ErrorKind::MismatchedSpace, "subset over " + std::to_string(s.universe()) +
                                                " points used with a space of " +
                                                std::to_string(size()));
  }
}

std::uint64_t DescriptiveSpace::class_image(std::uint64_t bits) const noexcept {
  std::uint64_t classes = 0;
  while (bits != 0) {
    classes |= std::uint64_t{1} << class_of_[static_cast<std::size_t>(std::countr_zero(bits))];
    bits &= bits - 1;
  }
  return classes;
}

Subset DescriptiveSpace::descriptive_intersection(Subset const& a, Subset const& b) const {
  check_member(a);
  check_member(b);
  std::uint64_t const shared = class_image(a.bits()) & class_image(b.bits());
  std::uint64_t out = 0;
  std::uint64_t pool = a.bits() | b.bits();
  while (pool != 0) {
    auto p = static_cast<std::size_t>(std::countr_zero(pool));
    if ((shared >> class_of_[p]) & 1U) out |= std::uint64_t{1} << p;
    pool &= pool - 1;
  }
  return Subset::from_bits(size(), out);
}

bool DescriptiveSpace::near(Subset const& a, Subset const& b) const {
  check_member(a);
  check_member(b);
  return (class_image(a.bits()) & class_image(b.bits())) != 0;
}

Subset DescriptiveSpace::upper_approx(Subset const& n) const {
  check_member(n);
  return Subset::from_bits(size(), upper_bits(n.bits()));
}

DescriptiveSpace DescriptiveSpace::project(std::vector<std::size_t> const& coordinates) const {
  for (std::size_t c : coordinates) {
    if (c >= arity_) {
      throw Error(ErrorKind::InvalidArgument, "feature coordinate " + std::to_string(c) +
                                                  " out of range for arity " +
                                                  std::to_string(arity_));
    }
  }
  std::vector<FeatureVector> f;
  f.reserve(size());
  for (auto const& v : features_) {
    FeatureVector w;
    for (std::size_t c : coordinates) w.push_back(v[c]);
    f.push_back(std::move(w));
  }
  return DescriptiveSpace(std::move(f));
}

ProximityRelation ProximityRelation::derived(DescriptiveSpace const& space,
                                             std::vector<std::size_t> const& coordinates) {
  DescriptiveSpace reference = coordinates.empty() ? space : space.project(coordinates);
  auto probe = std::make_shared<DescriptiveSpace>(reference);
  return ProximityRelation(
      std::move(reference),
      [probe](Subset const& a, Subset const& b) { return probe->near(a, b); },
      RelationOrigin::Derived);
}

ProximityRelation ProximityRelation::user_supplied(DescriptiveSpace const& reference,
                                                   Predicate predicate) {
  return ProximityRelation(reference, std::move(predicate), RelationOrigin::UserSupplied);
}

bool DpReport::all_hold() const {
  return std::all_of(axioms.begin(), axioms.end(), [](AxiomResult const& a) { return a.holds; });
}

namespace {

struct AxiomChecker {
  ProximityRelation const& rel;
  DescriptiveSpace const& ref;
  std::size_t n;
  DpReport report;

  Subset set(std::uint64_t bits) const { return Subset::from_bits(n, bits); }

  void fail(std::size_t axiom, std::vector<std::uint64_t> const& tuple) {
    auto& a = report.axioms[axiom];
    if (!a.holds) return;
    a.holds = false;
    for (auto bits : tuple) a.witness.push_back(set(bits));
  }

  template <class Near>
  void pair_axioms(std::uint64_t a, std::uint64_t b, Near const& near) {
    report.cases += 1;
    bool const ab = near(a, b);
    if (b == 0 && (ab || near(b, a))) fail(0, ab ? std::vector{a, b} : std::vector{b, a});
    if (ab != near(b, a)) fail(1, {a, b});
    bool const meets = !ref.descriptive_intersection(set(a), set(b)).empty();
    if (meets != ab) fail(2, {a, b});
  }

  template <class Near>
  void union_axiom(std::uint64_t k, std::uint64_t s, std::uint64_t l, Near const& near) {
    report.cases += 1;
    if (near(k, s | l) != (near(k, s) || near(k, l))) fail(3, {k, s, l});
  }
};

}  // namespace

DpReport check_dp_axioms(ProximityRelation const& relation, DpCheckOptions const& options) {
  DescriptiveSpace const& ref = relation.reference();
  std::size_t const n = ref.size();
  AxiomChecker checker{relation, ref, n, {}};
  for (std::size_t i = 0; i < 4; ++i) checker.report.axioms[i].axiom = "DP." + std::to_string(i);

  if (n <= options.exhaustive_bound) {
    std::uint64_t const count = std::uint64_t{1} << n;
    // Tabulate the relation once; DP.3 alone needs count^3 lookups.
    std::vector<char> table(count * count);
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b)
        table[a * count + b] = relation(checker.set(a), checker.set(b)) ? 1 : 0;
    auto near = [&](std::uint64_t a, std::uint64_t b) { return table[a * count + b] != 0; };
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b) checker.pair_axioms(a, b, near);
    for (std::uint64_t k = 0; k < count; ++k)
      for (std::uint64_t s = 0; s < count; ++s)
        for (std::uint64_t l = 0; l < count; ++l) checker.union_axiom(k, s, l, near);
    checker.report.exhaustive = true;
    return checker.report;
  }

  if (options.samples == 0) {
    throw Error(ErrorKind::TooLarge, "exhaustive DP-axiom check limited to " +
                                         std::to_string(options.exhaustive_bound) +
                                         " points, space has " + std::to_string(n));
  }
  Rng rng(options.seed);
  std::uint64_t const mask = low_mask(n);
  auto near = [&](std::uint64_t a, std::uint64_t b) {
    return relation(checker.set(a), checker.set(b));
  };
  for (std::size_t i = 0; i < options.samples; ++i) {
    std::uint64_t const a = rng.next() & mask;
    // Every fourth pair probes the void set so DP.0 is actually exercised.
    std::uint64_t const b = (i % 4 == 0) ? 0 : (rng.next() & mask);
    checker.pair_axioms(a, b, near);
    checker.union_axiom(a, rng.next() & mask, rng.next() & mask, near);
  }
  checker.report.exhaustive = false;
  return checker.report;
}

}  // namespace proxideal
