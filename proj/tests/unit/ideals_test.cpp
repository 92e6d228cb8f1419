#include "helpers.hpp"

using namespace testing;

TEST_SUITE("approx ideals") {
  TEST_CASE("ideal membership in Z6") {
    auto const z6 = make_fixture("F-Z6i");
    CHECK(is_approx_ideal(z6, set(z6, {0, 3})));
    Decision const d = is_approx_ideal(z6, set(z6, {0, 1}));
    CHECK_FALSE(d);
    CHECK(d.witness.rule == "negation");
    CHECK(d.witness.points == pts({1, 5}));
  }

  TEST_CASE("argument errors") {
    auto const z6 = make_fixture("F-Z6i");
    CHECK(error_kind([&] { is_approx_ideal(z6, Subset(6)); }) == ErrorKind::EmptySet);
    auto const r = make_fixture("F-R013");
    CHECK(error_kind([&] { is_approx_ideal(r, set(r, {0, 2})); }) == ErrorKind::NotInCarrier);
    CHECK(error_kind([&] { is_prime(z6, set(z6, {0, 1})); }) == ErrorKind::NotAnIdeal);
    CHECK(error_kind([&] { is_approx_ideal(z6, Subset(4, {0})); }) == ErrorKind::MismatchedSpace);
  }

  TEST_CASE("prime ideals") {
    auto const z4 = make_fixture("F-Z4p");
    CHECK(is_prime(z4, set(z4, {0, 2})));
    Decision const d = is_prime(z4, set(z4, {0}));
    CHECK_FALSE(d);
    CHECK(d.witness.points == pts({1, 2}));
    auto const r = make_fixture("F-R013");
    CHECK(is_approx_ideal(r, set(r, {0})));
    CHECK(is_prime(r, set(r, {0})));
    auto const z8 = make_fixture("F-Z8i");
    CHECK(is_prime(z8, set(z8, {0, 2, 4, 6})));
    CHECK_FALSE(is_prime(z8, set(z8, {0, 4})));
  }

  TEST_CASE("primary ideals") {
    auto const z8 = make_fixture("F-Z8i");
    CHECK(is_primary(z8, set(z8, {0, 4})));
    CHECK(is_p_primary(z8, set(z8, {0, 4}), set(z8, {0, 2, 4, 6})));
    auto const z4 = make_fixture("F-Z4p");
    Decision const d = is_primary(z4, set(z4, {0}));
    CHECK_FALSE(d);
    CHECK(d.witness.points == pts({2, 1}));
    CHECK_FALSE(is_primary(make_fixture("F-Z6i"), set(make_fixture("F-Z6i"), {0})));
  }

  TEST_CASE("radicals") {
    auto const z8 = make_fixture("F-Z8i");
    CHECK(radical(z8, set(z8, {0})).members() == pts({0, 2, 4, 6}));
    auto const z6 = make_fixture("F-Z6i");
    CHECK(radical(z6, set(z6, {0})).members() == pts({0}));
    auto const z4 = make_fixture("F-Z4p");
    CHECK(radical(z4, set(z4, {0})).members() == pts({0, 2}));
  }

  TEST_CASE("semi-primary ideals") {
    auto const z8 = make_fixture("F-Z8i");
    CHECK(is_semi_primary(z8, set(z8, {0})));
    auto const z6 = make_fixture("F-Z6i");
    CHECK(is_semi_primary(z6, set(z6, {0})).holds == is_prime(z6, set(z6, {0})).holds);
  }

  TEST_CASE("1-absorbing primary ideals") {
    auto const z4 = make_fixture("F-Z4p");
    CHECK(is_one_absorbing_primary(z4, set(z4, {0})));
    auto const z6 = make_fixture("F-Z6i");
    CHECK(is_one_absorbing_primary(z6, set(z6, {0, 2, 4})));
    auto const even = AlgebraInstance::modular(4, DescriptiveSpace::modular(4, 2), Subset(4, {0, 2}));
    CHECK(error_kind([&] { is_one_absorbing_primary(even, Subset(4, {0})); }) == ErrorKind::NoUnity);
  }

  TEST_CASE("colons") {
    auto const z6 = make_fixture("F-Z6i");
    CHECK(colon(z6, set(z6, {0, 3}), 2).members() == pts({0, 3}));
    CHECK(colon(z6, set(z6, {0, 3}), 3) == Subset::full(6));
  }

  TEST_CASE("intersections") {
    auto const z6 = make_fixture("F-Z6i");
    CHECK(intersect_ideals(z6, {set(z6, {0, 3}), set(z6, {0, 2, 4})}).members() == pts({0}));
    CHECK(error_kind([&] { intersect_ideals(z6, {}); }) == ErrorKind::EmptyList);
  }
}

TEST_SUITE("quotients") {
  TEST_CASE("Z8 modulo {0,4}") {
    auto const z8 = make_fixture("F-Z8i");
    QuotientStructure const q = quotient(z8, set(z8, {0, 4}));
    CHECK(q.well_defined);
    CHECK(q.coset_count() == 4);
    CHECK(q.tables_total());
    REQUIRE(q.zero_coset);
    CHECK(*q.zero_coset == 0);
    std::size_t const two = static_cast<std::size_t>(q.coset_of[2]);
    CHECK(q.cosets[two].members() == pts({2, 6}));
    CHECK(q.is_zero_divisor(two));
    CHECK(q.is_nilpotent(two));
    CHECK_FALSE(q.is_zero_divisor(static_cast<std::size_t>(q.coset_of[1])));
    auto const inst = quotient_instance(z8, q);
    CHECK(inst.size() == 4);
    CHECK(inst.flags().ring);
  }

  TEST_CASE("quotient by a non-ideal throws") {
    auto const z6 = make_fixture("F-Z6i");
    CHECK(error_kind([&] { quotient(z6, set(z6, {0, 1})); }) == ErrorKind::NotAnIdeal);
  }

  TEST_CASE("image of an ideal") {
    auto const z8 = make_fixture("F-Z8i");
    QuotientStructure const q = quotient(z8, set(z8, {0, 4}));
    CHECK(q.image(set(z8, {0, 2, 4, 6})).size() == 2);
  }
}

TEST_SUITE("products and classification") {
  TEST_CASE("Z2 x Z2") {
    auto const z2 = make_fixture("F-Z2");
    auto const p = product_instance(z2, z2);
    CHECK(p.size() == 4);
    CHECK(p.flags().ring);
    CHECK(p.factors() != nullptr);
    CHECK(p.fingerprint() == make_fixture("F-Z2xZ2").fingerprint());
    CHECK(error_kind([&] { product_instance(z2, z2, 3); }) == ErrorKind::SizeOverflow);
  }

  TEST_CASE("classification of {0} in parity-probed Z4") {
    auto const z4 = make_fixture("F-Z4p");
    ClassificationReport const r = classify_ideal(z4, set(z4, {0}));
    CHECK(r.ideal.holds());
    CHECK(r.prime.status == Verdict::Fails);
    CHECK(r.prime.witness.points == pts({1, 2}));
    CHECK(r.primary.status == Verdict::Fails);
    CHECK(r.one_absorbing.holds());
    CHECK(r.radical.members() == pts({0, 2}));
  }

  TEST_CASE("classification of a non-ideal") {
    auto const z6 = make_fixture("F-Z6i");
    ClassificationReport const r = classify_ideal(z6, set(z6, {0, 1}));
    CHECK(r.ideal.status == Verdict::Fails);
    CHECK(r.prime.status == Verdict::NotApplicable);
  }
}
