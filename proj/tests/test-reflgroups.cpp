#include "doctest.h"

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "garside/errors.hpp"
#include "garside/reflgroups.hpp"

using namespace garside;

namespace {
  std::vector<GroupData> const& table() {
    static auto const t = read_exceptional_table(fixtures::data("exceptional.txt"));
    return t;
  }

  // Oracle: regular iff as many degrees as codegrees are divisible by d.
  integers regular_oracle(GroupData const& gd) {
    integers out;
    for (std::int64_t d = 1; d <= 1000; ++d) {
      auto a = std::count_if(gd.degrees.begin(), gd.degrees.end(),
                             [d](auto x) { return x % d == 0; });
      auto b = std::count_if(gd.codegrees.begin(), gd.codegrees.end(),
                             [d](auto x) { return x % d == 0; });
      if (a == b) {
        out.push_back(d);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("exceptional table") {
  CHECK(table().size() == 34);
  for (auto const& gd : table()) {
    CHECK(gd.degrees.size() == gd.codegrees.size());
    CHECK(gd.codegrees.front() == 0);
  }
  auto g12 = group_data("G12", table());
  CHECK(g12.degrees == integers{6, 8});
  CHECK(g12.codegrees == integers{0, 10});
  CHECK(g12.rank() == 2);
  CHECK(group_data("G13", table()).degrees == integers{8, 12});
  CHECK_THROWS_AS(group_data("G3", table()), ParseError);
  CHECK_THROWS_AS(group_data("H12", table()), ParseError);
  CHECK_THROWS_AS(group_data("G(5,2,2)", table()), ParseError);
  CHECK_THROWS_AS(parse_exceptional_table("G12: degrees=6,8 codegrees=0,12\n"), ParseError);
  CHECK_THROWS_AS(parse_exceptional_table("G4: degrees=4,6\n"), ParseError);
  CHECK_THROWS_AS(parse_exceptional_table("G4: degrees=4,6 codegrees=0\n"), ParseError);
  CHECK_THROWS_AS(read_exceptional_table("/nonexistent/table.txt"), InputError);
}

TEST_CASE("series formulas") {
  auto dih = group_data("G(12,12,2)", table());
  CHECK(dih.degrees == integers{2, 12});
  CHECK(dih.codegrees == integers{0, 10});
  for (std::int64_t de = 2; de <= 8; ++de) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      auto gd = series_group({de, 1, n});
      integers deg, codeg;
      for (std::int64_t k = 1; k <= n; ++k) {
        deg.push_back(de * k);
        codeg.push_back(de * (k - 1));
      }
      CHECK(gd.degrees == deg);
      CHECK(gd.codegrees == codeg);
    }
  }
  auto s4 = series_group({1, 1, 4});
  CHECK(s4.degrees == integers{2, 3, 4});
  CHECK(s4.codegrees == integers{0, 1, 2});
  CHECK_THROWS_AS(series_group({6, 4, 2}), Error);
  CHECK_THROWS_AS(series_group({0, 1, 2}), Error);
}

TEST_CASE("regularity in G12 and G13") {
  auto g12 = group_data("G12", table());
  auto g13 = group_data("G13", table());
  CHECK(regular_numbers(g12) == integers{1, 2, 3, 4, 6, 8});
  CHECK(regular_numbers(g13) == integers{1, 2, 3, 4, 6, 12});
  CHECK(fundamentals(g12) == integers{2, 6, 8});
  CHECK(fundamentals(g13) == integers{4, 12});
  CHECK(regular_classes(g12) == std::vector<integers>{{1, 2}, {3, 6}, {4, 8}});
  CHECK(regular_classes(g13) == std::vector<integers>{{1, 2, 4}, {3, 6, 12}});
  CHECK(divisibility_classes(g12) == regular_classes(g12));
  CHECK(divisibility_classes(g13) == regular_classes(g13));
  CHECK(group_order(g13) == 96);
  CHECK(center_order(g13) == 4);
  CHECK(center_order(g12) == 2);
}

TEST_CASE("regularity agrees with the oracle everywhere") {
  auto groups = table();
  for (auto const& s : series_groups({12, 4})) {
    groups.push_back(s);
  }
  for (auto const& gd : groups) {
    CHECK(regular_numbers(gd) == regular_oracle(gd));
    auto r1 = regularity(gd, 1);
    CHECK(r1.regular);
    CHECK(r1.a == gd.degrees);
    for (auto d : regular_numbers(gd)) {
      auto r = regularity(gd, d);
      REQUIRE(r.fundamental);
      CHECK(*r.fundamental % d == 0);
      auto f = regularity(gd, *r.fundamental);
      CHECK(f.regular);
      CHECK(f.a == r.a);
      CHECK(f.b == r.b);
    }
    // The classes partition the regular numbers.
    integers all;
    for (auto const& c : regular_classes(gd)) {
      all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == regular_numbers(gd));
  }
}

TEST_CASE("the dihedral group G(12,12,2)") {
  auto dih = group_data("G(12,12,2)", table());
  auto r3  = regularity(dih, 3);
  auto r4  = regularity(dih, 4);
  CHECK(r3.regular);
  CHECK(r4.regular);
  CHECK(r3.fundamental == 12);
  CHECK(r4.fundamental == 12);
  CHECK(std::gcd(3, 4) == 1);
  CHECK_FALSE(r3.class_minimum);
  CHECK(regularity(dih, 1).fundamental == 2);
}

TEST_CASE("classes of exceptional groups have unique minima") {
  std::vector<std::string> bad;
  for (auto const& gd : table()) {
    for (auto d : regular_numbers(gd)) {
      if (!regularity(gd, d).class_minimum) {
        bad.push_back(gd.name);
      }
    }
  }
  CHECK(bad.empty());
}

TEST_CASE("orders") {
  CHECK(group_order(group_data("G12", table())) == 48);
  CHECK(group_order(group_data("G37", table())) == 696729600);
  CHECK(group_order(series_group({3, 1, 4})) == 3 * 6 * 9 * 12);
  CHECK_THROWS_AS(group_order(series_group({100, 1, 20})), Error);
}

TEST_CASE("isodiscriminantal pairs") {
  auto pairs = isodiscriminantal_pairs(table());
  std::set<std::pair<std::string, std::string>> got;
  for (auto const& p : pairs) {
    got.insert({p.first.name, p.second.name});
    CHECK(p.first.degrees == p.second.degrees);
    CHECK(p.first.codegrees == p.second.codegrees);
    CHECK(p.first.rank() == p.second.rank());
    CHECK(p.first.name != p.second.name);
    // No reversed duplicate.
    CHECK(got.count({p.second.name, p.first.name}) == 0);
  }
  std::set<std::pair<std::string, std::string>> const expected = {
      {"G5", "G(6,1,2)"},      {"G10", "G(12,1,2)"},     {"G18", "G(30,1,2)"},
      {"G7", "G(12,2,2)"},     {"G11", "G(24,2,2)"},     {"G15", "G(24,4,2)"},
      {"G19", "G(60,2,2)"},    {"G26", "G(6,1,3)"},      {"G(1,1,4)", "G(2,2,3)"},
      {"G(1,1,3)", "G(3,3,2)"}, {"G(2,1,2)", "G(4,4,2)"}};
  CHECK(got == expected);
  CHECK(pairs.size() == 11);

  std::set<std::pair<std::string, std::string>> small;
  for (auto const& p : isodiscriminantal_pairs(table(), {5, 4})) {
    small.insert({p.first.name, p.second.name});
  }
  CHECK(std::includes(expected.begin(), expected.end(), small.begin(), small.end()));
  CHECK(small == std::set<std::pair<std::string, std::string>>{
                     {"G(1,1,4)", "G(2,2,3)"}, {"G(1,1,3)", "G(3,3,2)"},
                     {"G(2,1,2)", "G(4,4,2)"}});
  CHECK_THROWS_AS(isodiscriminantal_pairs(table(), {0, 3}), Error);
}
