#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "garside/congruence.hpp"
#include "garside/errors.hpp"
#include "garside/series.hpp"

using namespace garside;

TEST_CASE("type B presentations") {
  auto p1 = typeb_presentation(1);
  CHECK(p1.relations().empty());
  CHECK(p1.to_string(p1.delta()) == "b1");

  auto p2 = typeb_presentation(2);
  REQUIRE(p2.relations().size() == 1);
  CHECK(p2.to_string(p2.relations()[0].first) == "b1 b2 b1 b2");
  CHECK(p2.to_string(p2.relations()[0].second) == "b2 b1 b2 b1");
  CHECK(p2.to_string(p2.delta()) == "b1 b2 b1 b2");

  auto p3 = typeb_presentation(3);
  REQUIRE(p3.relations().size() == 3);
  CHECK(p3.to_string(p3.relations()[1].first) == "b2 b3 b2");
  CHECK(p3.to_string(p3.relations()[2].first) == "b1 b3");
  CHECK(p3.delta().size() == 9);

  CHECK(typeb_presentation(5).relations().size() == 1 + 3 + 6);
  CHECK_THROWS_AS(typeb_presentation(0), Error);
}

TEST_CASE("winding numbers") {
  CHECK(winding(epsilon_word(3)) == 1);
  CHECK(winding(epsilon_word(7)) == 1);
  for (std::int64_t e = 0; e < 6; ++e) {
    CHECK(winding(z_word(e)) == e);
    CHECK(winding(z_word(-e)) == -e);
  }
  for (std::int64_t i = 0; i < 6; ++i) {
    CHECK(winding(t_word(i)) == 0);
  }
  CHECK(t_word(2) == group_word{-1, -1, 2, 1, 1});
}

TEST_CASE("membership") {
  for (std::int64_t e = 1; e <= 6; ++e) {
    group_word lambda;
    for (std::int64_t k = 0; k < e; ++k) {
      auto eps = epsilon_word(4);
      lambda.insert(lambda.end(), eps.begin(), eps.end());
    }
    CHECK(is_member(lambda, e));
    CHECK(is_member(z_word(e), e));
  }
  CHECK_FALSE(is_member(epsilon_word(3), 2));
  CHECK(is_member(epsilon_word(3), 1));
  CHECK_THROWS_AS(is_member(epsilon_word(3), 0), Error);
}

TEST_CASE("winding is a homomorphism, membership a subgroup") {
  std::mt19937 rng(99);
  auto random_word = [&] {
    group_word w;
    for (int k = 0, n = rng() % 15; k < n; ++k) {
      int x = 1 + rng() % 3;
      w.push_back(rng() % 2 ? -x : x);
    }
    return w;
  };
  std::size_t violations = 0;
  for (int i = 0; i < 1000; ++i) {
    auto u  = random_word();
    auto v  = random_word();
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    violations += winding(uv) != winding(u) + winding(v);
    violations += winding(inverse(u)) != -winding(u);
    violations += winding(free_reduce(uv)) != winding(uv);
    for (std::int64_t e : {2, 3}) {
      if (is_member(u, e) && is_member(v, e)) {
        violations += !is_member(uv, e) || !is_member(inverse(u), e);
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("epsilon^n = Delta") {
  auto v2 = check_epsilon(2);
  CHECK(v2.ok());
  CHECK(v2.syntactic);
  CHECK(v2.simple_count == 8);
  auto v3 = check_epsilon(3);
  CHECK(v3.ok());
  CHECK(v3.simple_count == 48);
  CHECK(winding(epsilon_word(3)) * 3 == 3);
}

TEST_CASE("epsilon^3 and Delta are congruent words") {
  // Oracle independent of normal forms: the length-9 congruence classes.
  auto p = typeb_presentation(3);
  auto t = congruence_classes(p, 9);
  word_type eps3;
  for (int k = 0; k < 3; ++k) {
    eps3.insert(eps3.end(), {2, 1, 0});
  }
  CHECK(t.equivalent(eps3, p.delta()));
}
