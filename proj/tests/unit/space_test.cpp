#include "helpers.hpp"
#include "proxideal/random.hpp"

using namespace testing;

namespace {

DescriptiveSpace random_space(Rng& rng, std::size_t n, std::size_t labels) {
  std::vector<std::int64_t> f(n);
  for (auto& v : f) v = static_cast<std::int64_t>(rng.below(labels));
  return DescriptiveSpace::from_labels(f);
}

Subset random_subset(Rng& rng, std::size_t n) { return Subset::from_bits(n, rng.next() & low_mask(n)); }

}  // namespace

TEST_SUITE("subset") {
  TEST_CASE("membership and iteration follow ascending order") {
    Subset s(6, {4, 1, 3});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(0));
    CHECK(s.members() == pts({1, 3, 4}));
    CHECK(s.front() == 1);
    s.erase(1);
    CHECK(s.members() == pts({3, 4}));
  }

  TEST_CASE("set algebra") {
    Subset a(5, {0, 1, 2});
    Subset b(5, {2, 3});
    CHECK((a | b).members() == pts({0, 1, 2, 3}));
    CHECK((a & b).members() == pts({2}));
    CHECK((a - b).members() == pts({0, 1}));
    CHECK(Subset(5, {2}).is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK(Subset::full(5).size() == 5);
    CHECK(Subset::full(64).size() == 64);
  }

  TEST_CASE("canonical order is numeric mask order") {
    CHECK(Subset(4, {0, 1}) < Subset(4, {2}));
    CHECK(Subset(4, {2}) < Subset(4, {0, 2}));
  }

  TEST_CASE("errors") {
    CHECK(error_kind([] { Subset(3, {3}); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { Subset::from_bits(2, 0b100); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { Subset(65); }) == ErrorKind::SizeOverflow);
    CHECK(error_kind([] { Subset(3) | Subset(4); }) == ErrorKind::MismatchedSpace);
  }
}

TEST_SUITE("descriptive space") {
  TEST_CASE("parity probe on four points") {
    auto const sp = DescriptiveSpace::modular(4, 2);
    CHECK(sp.class_count() == 2);
    CHECK_FALSE(sp.injective_probe());
    CHECK(sp.descriptive_intersection(Subset(4, {0}), Subset(4, {2})).members() == pts({0, 2}));
    CHECK(sp.descriptive_intersection(Subset(4, {0}), Subset(4, {1})).empty());
    CHECK(sp.upper_approx(Subset(4, {0})).members() == pts({0, 2}));
    CHECK(sp.upper_approx(Subset(4, {1, 2})).members() == pts({0, 1, 2, 3}));
    CHECK(sp.near(Subset(4, {1}), Subset(4, {3})));
    CHECK_FALSE(sp.near(Subset(4, {1}), Subset(4, {0, 2})));
    CHECK(sp.feature_class(3).members() == pts({1, 3}));
  }

  TEST_CASE("injective probe makes the upper approximation the identity") {
    auto const sp = DescriptiveSpace::injective(5);
    CHECK(sp.injective_probe());
    Subset const s(5, {1, 4});
    CHECK(sp.upper_approx(s) == s);
  }

  TEST_CASE("upper approximation is extensive, monotone and idempotent") {
    Rng rng(11);
    for (int round = 0; round < 200; ++round) {
      std::size_t const n = rng.between(1, 10);
      auto const sp = random_space(rng, n, rng.between(1, n));
      Subset const a = random_subset(rng, n);
      Subset const b = a | random_subset(rng, n);
      Subset const ua = sp.upper_approx(a);
      CHECK(a.is_subset_of(ua));
      CHECK(ua.is_subset_of(sp.upper_approx(b)));
      CHECK(sp.upper_approx(ua) == ua);
    }
  }

  TEST_CASE("nearness is symmetric and matches a nonempty descriptive intersection") {
    Rng rng(12);
    for (int round = 0; round < 200; ++round) {
      std::size_t const n = rng.between(1, 8);
      auto const sp = random_space(rng, n, 3);
      Subset const a = random_subset(rng, n);
      Subset const b = random_subset(rng, n);
      CHECK(sp.near(a, b) == sp.near(b, a));
      CHECK(sp.near(a, b) == !sp.descriptive_intersection(a, b).empty());
    }
  }

  TEST_CASE("projection keeps the listed coordinates") {
    DescriptiveSpace const sp({{0, 1}, {0, 2}, {1, 1}});
    CHECK(sp.arity() == 2);
    CHECK(sp.injective_probe());
    auto const first = sp.project({0});
    CHECK(first.class_count() == 2);
    CHECK(first.upper_approx(Subset(3, {0})).members() == pts({0, 1}));
    CHECK(error_kind([&] { sp.project({2}); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("construction errors") {
    CHECK(error_kind([] { DescriptiveSpace(std::vector<FeatureVector>{}); }) == ErrorKind::ValidationError);
    CHECK(error_kind([] { DescriptiveSpace({{0}, {0, 1}}); }) == ErrorKind::ValidationError);
    CHECK(error_kind([] { DescriptiveSpace::injective(65); }) == ErrorKind::SizeOverflow);
    auto const sp = DescriptiveSpace::injective(3);
    CHECK(error_kind([&] { sp.upper_approx(Subset(4)); }) == ErrorKind::MismatchedSpace);
  }
}

TEST_SUITE("proximity axioms") {
  TEST_CASE("derived relations satisfy all four axioms") {
    Rng rng(5);
    for (int round = 0; round < 20; ++round) {
      std::size_t const n = rng.between(1, 5);
      auto const sp = random_space(rng, n, rng.between(1, n));
      DpReport const r = check_dp_axioms(ProximityRelation::derived(sp));
      CHECK(r.exhaustive);
      CHECK(r.all_hold());
    }
  }

  TEST_CASE("a relation projected onto one coordinate is checked against the projection") {
    DescriptiveSpace const sp({{0, 1}, {0, 2}, {1, 1}});
    CHECK(check_dp_axioms(ProximityRelation::derived(sp, {1})).all_hold());
  }

  TEST_CASE("the always-near relation breaks the void axiom") {
    auto const sp = DescriptiveSpace::constant(3);
    auto rel = ProximityRelation::user_supplied(
        sp, [](Subset const& a, Subset const& b) { return !(a | b).empty(); });
    DpReport const r = check_dp_axioms(rel);
    CHECK_FALSE(r[0].holds);
    CHECK(r[1].holds);
    CHECK(r[3].holds);
    REQUIRE(r[0].witness.size() == 2);
    CHECK((r[0].witness[0].empty() || r[0].witness[1].empty()));
  }

  TEST_CASE("oversized spaces need sampling") {
    auto const sp = DescriptiveSpace::injective(8);
    CHECK(error_kind([&] { check_dp_axioms(ProximityRelation::derived(sp)); }) == ErrorKind::TooLarge);
    DpCheckOptions opts;
    opts.samples = 500;
    opts.seed = 3;
    DpReport const r = check_dp_axioms(ProximityRelation::derived(sp), opts);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.all_hold());
  }
}

TEST_SUITE("rng") {
  TEST_CASE("bounded draws stay in range and repeat per seed") {
    Rng a(99), b(99);
    for (int i = 0; i < 1000; ++i) {
      auto const x = a.between(3, 7);
      CHECK(x >= 3);
      CHECK(x <= 7);
      CHECK(x == b.between(3, 7));
    }
  }
}
