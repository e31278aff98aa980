#include "doctest.h"

#include <map>
#include <random>

#include "fixtures.hpp"
#include "garside/congruence.hpp"
#include "garside/errors.hpp"

using namespace garside;

TEST_CASE("G12 length 4: stus, tust, ustu are congruent") {
  auto const& p = fixtures::g12_presentation();
  auto        t = congruence_classes(p, 4);
  CHECK(t.equivalent(p.parse_word("stus"), p.parse_word("tust")));
  CHECK(t.equivalent(p.parse_word("tust"), p.parse_word("ustu")));
  CHECK(t.representative(p.parse_word("ustu")) == p.parse_word("stus"));
}

TEST_CASE("short words") {
  auto const& p = fixtures::g12_presentation();
  auto        t = congruence_classes(p, 2);
  CHECK(t.number_of_classes(0) == 1);
  CHECK(t.number_of_classes(1) == 3);
  CHECK(t.number_of_classes(2) == 9);
  CHECK_FALSE(t.equivalent(p.parse_word("st"), p.parse_word("ts")));
  CHECK_FALSE(t.equivalent(p.parse_word("s"), p.parse_word("st")));
}

TEST_CASE("classes agree with brute-force rewriting") {
  for (auto const* p : {&fixtures::g12_presentation(), &fixtures::g13_presentation()}) {
    std::size_t const max = 6;
    auto              t   = congruence_classes(*p, max);
    for (std::size_t len = 0; len <= max; ++len) {
      std::map<std::size_t, std::size_t> sizes;
      auto const words = fixtures::all_words(3, len);
      for (auto const& w : words) {
        sizes[t.class_index(w)]++;
      }
      CHECK(sizes.size() == t.number_of_classes(len));
      // Each class is exactly one rewrite orbit, with the least word as
      // representative.
      std::set<word_type> done;
      for (auto const& w : words) {
        if (done.count(w)) {
          continue;
        }
        auto orbit = fixtures::rewrite_class(*p, w);
        done.insert(orbit.begin(), orbit.end());
        CHECK(sizes[t.class_index(w)] == orbit.size());
        CHECK(t.representative(w) == *orbit.begin());
        for (auto const& v : orbit) {
          CHECK(t.class_index(v) == t.class_index(w));
        }
      }
    }
  }
}

TEST_CASE("compatibility with concatenation") {
  auto const&     p = fixtures::g13_presentation();
  auto            t = congruence_classes(p, 8);
  std::mt19937    rng(12345);
  std::size_t     checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto len1 = rng() % 5;
    auto len2 = rng() % (9 - len1);
    auto pick = [&](std::size_t len) {
      auto words = t.words(len);
      return words[rng() % words.size()];
    };
    auto u  = pick(len1);
    auto u2 = t.representative(u);
    auto v  = pick(len2);
    auto v2 = t.representative(v);
    CHECK(t.equivalent(concat(u, v), concat(u2, v2)));
    ++checked;
  }
  CHECK(checked == 2000);
}

TEST_CASE("determinism") {
  auto const& p = fixtures::g13_presentation();
  auto        a = congruence_classes(p, 5);
  auto        b = congruence_classes(p, 5);
  for (std::size_t i = 0; i < a.number_of_classes(5); ++i) {
    CHECK(a.representative(5, i) == b.representative(5, i));
  }
}

TEST_CASE("errors") {
  auto bad = parse_presentation("gens: a b\nrel: a a = b\ndelta: a a\n");
  CHECK_THROWS_AS(congruence_classes(bad, 3), Error);
  CHECK_THROWS_AS(congruence_classes(fixtures::g12_presentation(), 8, 100),
                  BudgetExceeded);
}

TEST_CASE("budget default") {
  CHECK(default_enumeration_budget == 59049);
}
