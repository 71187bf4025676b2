#include <doctest.h>

#include "helpers.hpp"
#include "pdd/io.hpp"

using namespace pdd;
using pdd_test::fixture_path;

TEST_CASE("rational parsing and formatting") {
  CHECK(*parse_rational("1/2") == Rational(1, 2));
  CHECK(*parse_rational("1") == Rational(1));
  CHECK(*parse_rational("2/4") == Rational(1, 2));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("a/b").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(1)) == "1");
  CHECK(format_rational(Rational(4, 2)) == "2");
}

TEST_CASE("instance fixture round-trips to canonical form") {
  std::string text = io::read_file(fixture_path("w1.pdd"));
  PddInstance inst = io::parse_instance(text);
  CHECK(inst.budget() == 2);
  CHECK(inst.target() == 8);
  CHECK(inst.web().size() == 3);
  CHECK(inst.gamma(0) == Rational(1));
  CHECK(inst.gamma(1) == Rational(1, 2));
  std::string canon = io::serialize_instance(inst);
  CHECK(io::serialize_instance(io::parse_instance(canon)) == canon);
  // The fixture differs from canonical form only by its comment line.
  CHECK(canon == std::string(text).erase(0, text.find('\n') + 1));
}

TEST_CASE("instance parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(io::parse_instance("pdd 2\n"), "line 1: expected 'pdd 1' header",
                       io::ParseError);
  std::string bad_gamma =
      "pdd 1\nbudget 1\ntarget 0\nspecies a 1\nspecies c 1\narc a c 3/2\n";
  CHECK_THROWS_WITH_AS(io::parse_instance(bad_gamma), "line 6: gamma out of (0,1]",
                       io::ParseError);
  std::string bad_rat = "pdd 1\nbudget 1\ntarget 0\nspecies a 1\nspecies c 1\narc a c x\n";
  CHECK_THROWS_WITH_AS(io::parse_instance(bad_rat), "line 6: malformed rational 'x'",
                       io::ParseError);
  std::string dup_arc =
      "pdd 1\nbudget 1\ntarget 0\nspecies a 1\nspecies b 1\narc a b 1\narc a b 1\n";
  CHECK_THROWS_AS(io::parse_instance(dup_arc), std::invalid_argument);
  std::string unknown =
      "pdd 1\nbudget 1\ntarget 0\nspecies a 1\narc a z 1\n";
  CHECK_THROWS_AS(io::parse_instance(unknown), std::invalid_argument);
}

TEST_CASE("extension fixture round-trips and is validated") {
  PddInstance w1 = io::parse_instance(io::read_file(fixture_path("w1.pdd")));
  std::string text = io::read_file(fixture_path("w1_path.ext"));
  TreeExtension t = io::parse_extension(text, w1.web());
  CHECK(t.root() == 0);
  CHECK(io::serialize_extension(t, w1.web()) == text);

  CHECK_THROWS_AS(io::parse_extension("ext 1\nroot z\n", w1.web()), io::ParseError);
  // c -> b -> a is a tree but not a tree extension of this web.
  CHECK_THROWS_AS(
      io::parse_extension("ext 1\nroot c\nparent b c\nparent a b\n", w1.web()),
      std::invalid_argument);
  CHECK_THROWS_AS(io::parse_extension("ext 1\nroot a\nparent b a\n", w1.web()),
                  io::ParseError);
}

TEST_CASE("set fixture round-trips") {
  PddInstance w1 = io::parse_instance(io::read_file(fixture_path("w1.pdd")));
  std::string text = io::read_file(fixture_path("ac.set"));
  SpeciesSet s = io::parse_set(text, w1.web());
  CHECK(s == SpeciesSet::of(3, {0, 2}));
  CHECK(io::serialize_set(s, w1.web()) == text);
  CHECK_THROWS_AS(io::parse_set("set 1\nmember a\nmember a\n", w1.web()), io::ParseError);
}

TEST_CASE("cds fixture round-trips") {
  std::string text = io::read_file(fixture_path("fig1.cds"));
  CdsInstance cds = io::parse_cds(text);
  CHECK(cds.size() == 4);
  CHECK(cds.edges().size() == 4);
  CHECK(cds.k() == 2);
  CHECK(cds.capacity(cds.index_of("c")) == 2);
  CHECK(io::serialize_cds(cds) == text);
  CHECK_THROWS_AS(io::parse_cds("cds 1\nk 1\nvertex a 1\nedge a b\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_cds("cds 1\nvertex a 1\n"), io::ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text =
      "# leading comment\n\npdd 1\nbudget 1  # trailing\ntarget 0\n\nspecies a 2\n";
  PddInstance inst = io::parse_instance(text);
  CHECK(inst.d(0) == 2);
}
