#include <algorithm>

#include "helpers.hpp"

using namespace testing;

namespace {

using Sets = std::vector<std::vector<Point>>;

TheoremFinding const& finding_for(std::vector<TheoremFinding> const& all, TheoremId id) {
  auto it = std::find_if(all.begin(), all.end(), [&](auto const& f) { return f.theorem == id; });
  REQUIRE(it != all.end());
  return *it;
}

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("names and errors") {
    CHECK(fixture_names().size() == 7);
    for (auto const& name : fixture_names()) CHECK_NOTHROW(make_fixture(name));
    CHECK(error_kind([] { make_fixture("F-none"); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("ideal enumeration") {
    CHECK(members(enumerate_ideals(make_fixture("F-Z6i"))) == Sets{{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
    CHECK(members(enumerate_ideals(make_fixture("F-Z4p"))) ==
          Sets{{0}, {2}, {0, 2}, {0, 1, 3}, {1, 2, 3}, {0, 1, 2, 3}});
    CHECK(members(enumerate_ideals(make_fixture("F-Z8i"))) ==
          Sets{{0}, {0, 4}, {0, 2, 4, 6}, {0, 1, 2, 3, 4, 5, 6, 7}});
    CHECK(members(enumerate_ideals(make_fixture("F-R013"))) == Sets{{0}, {0, 1, 3}});
  }

  TEST_CASE("enumeration refuses large carriers") {
    auto const big = AlgebraInstance::modular(17, DescriptiveSpace::injective(17));
    CHECK(error_kind([&] { enumerate_ideals(big); }) == ErrorKind::TooLarge);
  }
}

TEST_SUITE("generator") {
  TEST_CASE("exhaustive count at two points over two labels") {
    GenParams p;
    p.family = Family::Exhaustive;
    p.min_points = 2;
    p.max_points = 2;
    p.alphabet = 2;
    CHECK(InstanceStream::exhaustive_count(p) == 1536);
    InstanceStream s(p);
    std::uint64_t n = 0;
    while (s.next()) ++n;
    CHECK(n == 1536);
  }

  TEST_CASE("same seed, same instances") {
    GenParams p;
    p.samples = 40;
    p.seed = 7;
    p.max_points = 8;
    auto const a = generate_instances(p);
    auto const b = generate_instances(p);
    REQUIRE(a.size() == 40);
    REQUIRE(b.size() == 40);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].fingerprint() == b[i].fingerprint());
    p.seed = 8;
    auto const c = generate_instances(p);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].fingerprint() != c[i].fingerprint();
    CHECK(differs);
  }

  TEST_CASE("modular family at four points reaches parity-probed Z4") {
    GenParams p;
    p.min_points = 4;
    p.max_points = 4;
    p.alphabet = 2;
    p.samples = 400;
    p.products = false;
    auto const target = make_fixture("F-Z4p").fingerprint();
    bool found = false;
    for (auto const& inst : generate_instances(p)) found = found || inst.fingerprint() == target;
    CHECK(found);
  }

  TEST_CASE("random family yields rings") {
    GenParams p;
    p.family = Family::RandomTables;
    p.max_points = 2;
    p.samples = 5;
    for (auto const& inst : generate_instances(p)) CHECK(inst.flags().ring);
  }

  TEST_CASE("infeasible parameters") {
    GenParams p;
    p.family = Family::Exhaustive;
    p.max_points = 4;
    CHECK(error_kind([&] { InstanceStream s(p); }) == ErrorKind::InfeasibleParams);
    p.family = Family::Modular;
    p.min_points = 3;
    p.max_points = 2;
    CHECK(error_kind([&] { InstanceStream s(p); }) == ErrorKind::InfeasibleParams);
  }

  TEST_CASE("family names") {
    for (Family f : {Family::Exhaustive, Family::Modular, Family::RandomTables, Family::Fixtures}) {
      CHECK(parse_family(to_string(f)) == f);
    }
    CHECK_FALSE(parse_family("other"));
  }
}

TEST_SUITE("theorem suite") {
  TEST_CASE("theorem ids round-trip") {
    CHECK(all_theorems().size() == 18);
    for (TheoremId id : all_theorems()) CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK(to_string(TheoremId::ThmA) == "THM-A");
    CHECK_FALSE(is_claim(TheoremId::ConvK));
    CHECK(is_claim(TheoremId::ThmK));
  }

  TEST_CASE("1-absorbing primary but not primary on parity-probed Z4") {
    auto const z4 = make_fixture("F-Z4p");
    auto const findings = evaluate_instance(z4, {TheoremId::ConvK, TheoremId::ThmK});
    TheoremFinding const& conv = finding_for(findings, TheoremId::ConvK);
    CHECK(conv.status == FindingStatus::Counterexample);
    CHECK(replay_counterexample(z4, conv));
    CHECK(finding_for(findings, TheoremId::ThmK).status == FindingStatus::Confirmed);
  }

  TEST_CASE("replay rejects a foreign instance") {
    auto const z4 = make_fixture("F-Z4p");
    auto const conv = finding_for(evaluate_instance(z4, {TheoremId::ConvK}), TheoremId::ConvK);
    CHECK_FALSE(replay_counterexample(make_fixture("F-Z6i"), conv));
  }

  TEST_CASE("universal theorems hold on every fixture") {
    std::vector<AlgebraInstance> fixtures;
    for (auto const& name : fixture_names()) fixtures.push_back(make_fixture(name));
    auto const findings = run_theorem_suite(
        fixtures, {TheoremId::RadExt, TheoremId::ThmA, TheoremId::ThmI, TheoremId::LemF});
    CHECK(findings.size() == 4 * fixtures.size());
    for (auto const& f : findings) CHECK(f.status != FindingStatus::Counterexample);
    CHECK(std::is_sorted(findings.begin(), findings.end(), [](auto const& a, auto const& b) {
      return std::pair(a.fingerprint, a.theorem) < std::pair(b.fingerprint, b.theorem);
    }));
  }

  TEST_CASE("the fixtures meet every theorem's hypothesis") {
    std::vector<AlgebraInstance> fixtures;
    for (auto const& name : fixture_names()) fixtures.push_back(make_fixture(name));
    auto const result = run_campaign(fixtures, all_theorems());
    for (TheoremId id : all_theorems()) {
      CAPTURE(to_string(id));
      TheoremTally const& t = result.tallies.at(id);
      CHECK(t.confirmed + t.counterexamples > 0);
    }
  }

  TEST_CASE("empty instance list") {
    CHECK(run_theorem_suite({}, all_theorems()).empty());
  }

  TEST_CASE("campaigns are deterministic across thread counts") {
    GenParams p;
    p.max_points = 6;
    p.samples = 300;
    p.seed = 4;
    CampaignOptions one;
    CampaignOptions four;
    four.threads = 4;
    four.batch = 32;
    auto const a = run_campaign(p, all_theorems(), one);
    auto const b = run_campaign(p, all_theorems(), four);
    CHECK(a.instances == 300);
    CHECK(a.instances == b.instances);
    for (TheoremId id : all_theorems()) {
      CHECK(a.tallies.at(id).confirmed == b.tallies.at(id).confirmed);
      CHECK(a.tallies.at(id).counterexamples == b.tallies.at(id).counterexamples);
    }
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
      CHECK(a.counterexamples[i].finding.fingerprint == b.counterexamples[i].finding.fingerprint);
      CHECK(replay_counterexample(*a.counterexamples[i].instance, a.counterexamples[i].finding));
    }
  }
}

TEST_SUITE("classical oracle") {
  TEST_CASE("refuses non-classical instances") {
    CHECK(error_kind([] { classical_oracle(make_fixture("F-Z4p")); }) == ErrorKind::NotClassical);
    CHECK(error_kind([] { classical_oracle(make_fixture("F-R013")); }) == ErrorKind::NotClassical);
  }

  TEST_CASE("agrees with the approximate predicates under an injective probe") {
    for (char const* name : {"F-Z6i", "F-Z8i", "F-Z2"}) {
      auto const inst = make_fixture(name);
      auto const oracle = classical_oracle(inst);
      auto const ideals = enumerate_ideals(inst);
      REQUIRE(oracle.size() == ideals.size());
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        ClassificationReport const mine = classify_ideal(inst, ideals[i]);
        CHECK(oracle[i].members == ideals[i]);
        CHECK(oracle[i].prime.status == mine.prime.status);
        CHECK(oracle[i].primary.status == mine.primary.status);
        CHECK(oracle[i].semi_primary.status == mine.semi_primary.status);
        CHECK(oracle[i].one_absorbing.status == mine.one_absorbing.status);
        CHECK(oracle[i].radical == mine.radical);
      }
    }
  }
}
