#include "helpers.hpp"
#include "proxideal/random.hpp"

using namespace testing;

TEST_SUITE("operation tables") {
  TEST_CASE("modular tables") {
    auto const add = OpTable::modular_add(5);
    auto const mul = OpTable::modular_mul(5);
    CHECK(add(3, 4) == 2);
    CHECK(mul(3, 4) == 2);
    CHECK(mul(0, 4) == 0);
  }

  TEST_CASE("validation") {
    CHECK(error_kind([] { OpTable(2, {0, 1, 1}); }) == ErrorKind::ValidationError);
    CHECK(error_kind([] { OpTable(2, {0, 1, 2, 0}); }) == ErrorKind::ValidationError);
    auto const sp = DescriptiveSpace::injective(2);
    CHECK(error_kind([&] {
            AlgebraInstance(sp, OpTable::modular_add(3), OpTable::modular_mul(2), Subset::full(2));
          }) == ErrorKind::ValidationError);
    CHECK(error_kind([&] {
            AlgebraInstance(sp, OpTable::modular_add(2), OpTable::modular_mul(2), Subset(2));
          }) == ErrorKind::ValidationError);
  }
}

TEST_SUITE("identities") {
  TEST_CASE("parity-probed Z4") {
    auto const z4 = make_fixture("F-Z4p");
    IdentityInfo const ids = locate_identities(z4);
    CHECK(ids.zero == 0);
    REQUIRE(ids.one);
    CHECK(*ids.one == 1);
    CHECK(*ids.neg[1] == 3);
    CHECK(*ids.neg[2] == 2);
  }

  TEST_CASE("even carrier of Z4 has a zero but no unity") {
    auto const even = AlgebraInstance::modular(4, DescriptiveSpace::modular(4, 2), Subset(4, {0, 2}));
    CHECK(locate_identities(even).zero == 0);
    CHECK_FALSE(locate_identities(even).one);
    CHECK(error_kind([&] { units(even); }) == ErrorKind::NoUnity);
    CHECK_FALSE(even.flags().has_unity);
  }

  TEST_CASE("carrier {0,1,3} of parity-probed Z4") {
    auto const r = make_fixture("F-R013");
    IdentityInfo const ids = locate_identities(r);
    CHECK(ids.zero == 0);
    CHECK(*ids.one == 1);
    CHECK(*ids.neg[3] == 1);
  }

  TEST_CASE("missing and ambiguous identities") {
    auto const sp = DescriptiveSpace::injective(2);
    // a + b = 1 everywhere: no additive identity.
    AlgebraInstance const none(sp, OpTable(2, {1, 1, 1, 1}), OpTable::modular_mul(2), Subset::full(2));
    CHECK(error_kind([&] { locate_identities(none); }) == ErrorKind::NoAdditiveIdentity);
    // Carrier {0} inside a constant probe where 0 + 1 = 1 + 0 = 0: both points act as zero.
    AlgebraInstance const two(DescriptiveSpace::constant(2), OpTable(2, {0, 0, 0, 1}),
                              OpTable::modular_mul(2), Subset(2, {0}));
    CHECK(two.identities().zero_candidates.size() == 2);
    Error const* caught = nullptr;
    try {
      locate_identities(two);
    } catch (Error const& e) {
      caught = &e;
      CHECK(e.kind() == ErrorKind::AmbiguousIdentity);
      CHECK(e.points() == pts({0, 1}));
    }
    CHECK(caught != nullptr);
  }

  TEST_CASE("units") {
    CHECK(units(make_fixture("F-Z4p")).members() == pts({1, 3}));
    CHECK(units(make_fixture("F-Z6i")).members() == pts({1, 5}));
  }
}

TEST_SUITE("structure flags") {
  TEST_CASE("Z_n is a commutative ring with unity, closed under both tables") {
    for (std::size_t n = 1; n <= 9; ++n) {
      auto const z = AlgebraInstance::modular(n, DescriptiveSpace::injective(n));
      auto const& f = z.flags();
      CHECK(f.ring);
      CHECK(f.commutative);
      CHECK(f.has_unity);
      CHECK(f.op_closed);
      CHECK(f.upper_closed_add);
      CHECK(f.upper_closed_mul);
      CHECK(f.mul_associative);
    }
  }

  TEST_CASE("carrier {0,1,3} is an approx commutative ring with unity that is not closed") {
    auto const r = make_fixture("F-R013");
    auto const& f = r.flags();
    CHECK(f.ring);
    CHECK(f.commutative);
    CHECK(f.has_unity);
    CHECK_FALSE(f.op_closed);
    CHECK(f.op_closed.witness.rule == "add");
    CHECK(f.op_closed.witness.points == pts({1, 1}));
  }

  TEST_CASE("failing ring reports the failing component") {
    auto const sp = DescriptiveSpace::injective(2);
    AlgebraInstance const inst(sp, OpTable(2, {0, 1, 1, 1}), OpTable::modular_mul(2), Subset::full(2));
    CHECK_FALSE(inst.flags().group_add);
    CHECK(inst.flags().group_add.witness.rule == "inverse");
    CHECK(inst.flags().ring.witness.rule == "group_add: inverse");
  }

  TEST_CASE("smaller carriers of parity-probed Z4") {
    auto const sp = DescriptiveSpace::modular(4, 2);
    auto const low = AlgebraInstance::modular(4, sp, Subset(4, {0, 1}));
    CHECK_FALSE(low.flags().group_add);
    auto const even = AlgebraInstance::modular(4, sp, Subset(4, {0, 2}));
    CHECK(upper_closed(even, Operation::Add));
    CHECK(upper_closed(even, Operation::Mul));
    auto const one = AlgebraInstance::modular(4, sp, Subset(4, {1}));
    Decision const d = upper_closed(one, Operation::Add);
    CHECK_FALSE(d);
    CHECK(d.witness.points == pts({1, 1}));
  }

  TEST_CASE("entries list every flag once") {
    auto const z = make_fixture("F-Z6i");
    CHECK(z.flags().entries().size() == 14);
  }
}

TEST_SUITE("powers and elements") {
  TEST_CASE("left-normed powers") {
    auto const z8 = make_fixture("F-Z8i");
    CHECK(power(z8, 2, 3) == 0);
    CHECK(power(z8, 3, 2) == 1);
    CHECK(z8.power(3, 20) == 1);
    CHECK(error_kind([&] { z8.power(3, 0); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("power law s^(m+1) = s^m * s on random tables") {
    Rng rng(21);
    for (int round = 0; round < 50; ++round) {
      std::size_t const n = rng.between(1, 6);
      std::vector<Point> add(n * n), mul(n * n);
      for (auto& c : add) c = static_cast<Point>(rng.below(n));
      for (auto& c : mul) c = static_cast<Point>(rng.below(n));
      AlgebraInstance const inst(DescriptiveSpace::injective(n), OpTable(n, add), OpTable(n, mul),
                                 Subset::full(n));
      for (Point s = 0; s < n; ++s) {
        CHECK(inst.power(s, 1) == s);
        for (std::size_t m = 1; m < 2 * n; ++m) CHECK(inst.power(s, m + 1) == inst.mul(inst.power(s, m), s));
      }
    }
  }

  TEST_CASE("nilpotents") {
    auto const z8 = make_fixture("F-Z8i");
    Nilpotency const two = is_nilpotent(z8, 2);
    CHECK(two.nilpotent);
    CHECK(*two.exponent == 3);
    CHECK_FALSE(is_nilpotent(z8, 3).nilpotent);
    CHECK_FALSE(is_nilpotent(make_fixture("F-Z6i"), 2).nilpotent);
    CHECK(*is_nilpotent(z8, 0).exponent == 1);
  }

  TEST_CASE("irreducible elements of Z8") {
    auto const z8 = make_fixture("F-Z8i");
    CHECK(is_irreducible(z8, 2));
    CHECK_FALSE(is_irreducible(z8, 4));
    CHECK(is_irreducible(z8, 4).witness.rule == "factorization");
    CHECK(is_irreducible(z8, 4).witness.points == pts({2, 2}));
    CHECK(is_irreducible(z8, 3).witness.rule == "unit");
  }

  TEST_CASE("integral domains") {
    CHECK(is_integral_domain(AlgebraInstance::modular(5, DescriptiveSpace::injective(5))));
    Decision const z6 = is_integral_domain(make_fixture("F-Z6i"));
    CHECK_FALSE(z6);
    CHECK(z6.witness.rule == "zero-divisor");
    CHECK(z6.witness.points == pts({2, 3}));
    CHECK(is_integral_domain(make_fixture("F-R013")));
  }

  TEST_CASE("fingerprints ignore names and track content") {
    auto const a = make_fixture("F-Z4p");
    AlgebraInstance const named(a.space(), a.add_table(), a.mul_table(), a.carrier(), {"a", "b", "c", "d"});
    CHECK(a.fingerprint() == named.fingerprint());
    CHECK(a.fingerprint() != make_fixture("F-R013").fingerprint());
    CHECK(a.fingerprint_hex().size() == 16);
  }
}
