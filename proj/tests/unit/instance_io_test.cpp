#include <string>

#include "helpers.hpp"
#include "proxideal/instance_io.hpp"

using namespace testing;

namespace {

std::string error_message(std::string const& text) {
  try {
    parse_instance(text);
  } catch (Error const& e) {
    return e.what();
  }
  return "";
}

std::string const kZ2 =
    "instance Z2\n"
    "points a b\n"
    "feature a = 0 7\n"
    "feature b = 1 7\n"
    "add\n0 1\n1 0\n"
    "mul\n0 0\n0 1\n"
    "carrier a b  # whole ring\n"
    "ideal Wa = a\n"
    "end\n";

}  // namespace

TEST_SUITE("instance format") {
  TEST_CASE("every fixture round-trips") {
    for (auto const& name : fixture_names()) {
      InstanceDocument const doc = document_with_ideals(name, make_fixture(name));
      std::string const text = serialize_instance(doc);
      InstanceDocument const back = parse_instance(text);
      CHECK(back.label == name);
      CHECK(back.instance.fingerprint() == doc.instance.fingerprint());
      CHECK(back.ideals == doc.ideals);
      CHECK(serialize_instance(back) == text);
    }
  }

  TEST_CASE("fixture documents name every ideal") {
    InstanceDocument const doc = document_with_ideals("F-Z6i", make_fixture("F-Z6i"));
    REQUIRE(doc.ideals.size() == 4);
    CHECK(doc.ideals[1].first == "W03");
    CHECK(doc.ideal("W03").members() == pts({0, 3}));
    CHECK(error_kind([&] { doc.ideal("W9"); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("named points, comments and arity-two probes") {
    InstanceDocument const doc = parse_instance(kZ2);
    CHECK(doc.label == "Z2");
    CHECK(doc.instance.space().arity() == 2);
    CHECK(doc.instance.name(1) == "b");
    CHECK(doc.point("b") == 1);
    CHECK(doc.ideal("Wa").members() == pts({0}));
    CHECK(doc.instance.flags().ring);
    CHECK(parse_instance(serialize_instance(doc)).instance.names() == doc.instance.names());
  }

  TEST_CASE("semantic errors cite their line") {
    std::string bad = kZ2;
    bad.replace(bad.find("feature b = 1 7"), 15, "feature b = 1");
    CHECK(error_kind([&] { parse_instance(bad); }) == ErrorKind::ValidationError);
    CHECK(error_message(bad).find("line 4:") != std::string::npos);

    std::string ragged = kZ2;
    ragged.replace(ragged.find("1 0\n"), 4, "1\n");
    CHECK(error_kind([&] { parse_instance(ragged); }) == ErrorKind::ValidationError);
    CHECK(error_message(ragged).find("line 7:") != std::string::npos);

    std::string undeclared = kZ2;
    undeclared.replace(undeclared.find("ideal Wa = a"), 12, "ideal Wa = c");
    CHECK(error_kind([&] { parse_instance(undeclared); }) == ErrorKind::ValidationError);

    std::string out_of_range = kZ2;
    out_of_range.replace(out_of_range.find("0 0\n"), 4, "0 2\n");
    CHECK(error_kind([&] { parse_instance(out_of_range); }) == ErrorKind::ValidationError);
  }

  TEST_CASE("grammar errors") {
    CHECK(error_kind([] { parse_instance(""); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_instance("points 0\n"); }) == ErrorKind::ParseError);
    std::string no_end = kZ2.substr(0, kZ2.find("end"));
    CHECK(error_kind([&] { parse_instance(no_end); }) == ErrorKind::ParseError);
    std::string junk = kZ2;
    junk.replace(junk.find("add\n"), 4, "add x\n");
    CHECK(error_kind([&] { parse_instance(junk); }) == ErrorKind::ParseError);
    std::string word = kZ2;
    word.replace(word.find("0 0\n"), 4, "0 z\n");
    CHECK(error_kind([&] { parse_instance(word); }) == ErrorKind::ParseError);
  }

  TEST_CASE("point limit") {
    CHECK(error_kind([] { parse_instance(kZ2, 1); }) == ErrorKind::TooLarge);
    CHECK(error_kind([] { load_instance("/nonexistent/file.inst"); }) == ErrorKind::InvalidArgument);
  }
}
