#include "doctest.h"

#include "fixtures.hpp"
#include "garside/errors.hpp"
#include "garside/presentation.hpp"

using namespace garside;

TEST_CASE("bundled G12 file") {
  auto const& p = fixtures::g12_presentation();
  CHECK(p.generators() == std::vector<std::string>{"s", "t", "u"});
  REQUIRE(p.relations().size() == 2);
  CHECK(p.to_string(p.relations()[0].first) == "stus");
  CHECK(p.to_string(p.relations()[0].second) == "tust");
  CHECK(p.to_string(p.delta()) == "stus");
  CHECK_FALSE(validate_homogeneous(p));
}

TEST_CASE("bundled G13 file") {
  auto const& p = fixtures::g13_presentation();
  CHECK(p.number_of_generators() == 3);
  CHECK(p.relations().size() == 2);
  CHECK(p.delta().size() == 9);
  CHECK_FALSE(validate_homogeneous(p));
}

TEST_CASE("comments, blank lines and CRLF") {
  auto p = parse_presentation("# a comment\r\n\r\ngens: x y\r\nrel: x y x = y x y\r\n"
                              "delta: x y x  \r\n# trailing comment\r\n");
  CHECK(p.number_of_generators() == 2);
  CHECK(p.relations().size() == 1);
  CHECK(p.to_string(p.delta()) == "xyx");
}

TEST_CASE("relation order is preserved") {
  auto p = parse_presentation("gens: a b c\nrel: a c = c a\nrel: a b a = b a b\n"
                              "rel: b c b = c b c\ndelta: a b c a b a\n");
  REQUIRE(p.relations().size() == 3);
  CHECK(p.to_string(p.relations()[0].first) == "ac");
  CHECK(p.to_string(p.relations()[1].first) == "aba");
  CHECK(p.to_string(p.relations()[2].first) == "bcb");
}

TEST_CASE("malformed presentations") {
  CHECK_THROWS_AS(parse_presentation("delta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\ngens: b\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\ndelta: a\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nfoo: a\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a a\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a = b\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a a\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: 1a\ndelta: 1a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens:\ndelta: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("no colon here\n"), ParseError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_presentation("/nonexistent/dir/x.gar"), InputError);
}

TEST_CASE("words") {
  auto const& p = fixtures::g12_presentation();
  CHECK(p.parse_word("s t u") == word_type{0, 1, 2});
  CHECK(p.parse_word("stu") == word_type{0, 1, 2});
  CHECK(p.parse_word("") == word_type{});
  CHECK(p.parse_group_word("s^-1 t") == group_word{-1, 2});
  CHECK(p.to_string(group_word{-1, 2}) == "s^-1 t");
  CHECK(p.parse_group_word(p.to_string(group_word{-1, 2})) == group_word{-1, 2});
  CHECK_THROWS_AS(p.parse_word("x"), ParseError);

  auto q = parse_presentation("gens: b1 b2\nrel: b1 b2 b1 b2 = b2 b1 b2 b1\n"
                              "delta: b1 b2 b1 b2\n");
  CHECK(q.parse_word("b1 b2") == word_type{0, 1});
  CHECK(q.to_string(word_type{0, 1}) == "b1 b2");
  CHECK(q.parse_group_word(q.to_string(group_word{2, -1})) == group_word{2, -1});
}

TEST_CASE("non-homogeneous relation is reported") {
  auto p = parse_presentation("gens: a b\nrel: a a = b\ndelta: a a\n");
  auto v = validate_homogeneous(p);
  REQUIRE(v);
  CHECK(v->relation == 0);
  CHECK(v->lhs_length == 2);
  CHECK(v->rhs_length == 1);
}
