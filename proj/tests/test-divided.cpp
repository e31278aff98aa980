#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "garside/congruence.hpp"
#include "garside/divided.hpp"
#include "garside/errors.hpp"

using namespace garside;

namespace {
  std::set<std::string> first_entries(GarsideStructure const&          g,
                                      std::vector<DividedTuple> const& ts) {
    std::set<std::string> out;
    for (auto const& t : ts) {
      out.insert(g.to_string(t.front()));
    }
    return out;
  }

  // Oracle: all m-tuples of simples whose concatenated words are congruent
  // to Delta, by brute force over the congruence table.
  std::vector<DividedTuple> brute_decompositions(GarsideStructure const& g,
                                                 std::size_t             m) {
    auto const t = congruence_classes(g.presentation(), g.delta_length());
    std::vector<DividedTuple> out;
    DividedTuple              cur(m, 0);
    while (true) {
      word_type w;
      for (auto a : cur) {
        w = concat(w, g.word(a));
      }
      if (w.size() == g.delta_length() && t.equivalent(w, g.word(g.delta()))) {
        out.push_back(cur);
      }
      std::size_t i = m;
      while (i > 0 && cur[i - 1] + 1 == g.size()) {
        cur[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++cur[i - 1];
    }
  }

  std::vector<DividedTuple> fixed_by_shift(GarsideStructure const&   g,
                                           std::vector<DividedTuple> ts,
                                           std::size_t               n) {
    std::erase_if(ts, [&](auto const& t) { return twisted_shift(g, t, n) != t; });
    return ts;
  }

  NormalForm collapse_of(GarsideStructure const& g,
                         DividedCategory const&  c,
                         std::size_t             e) {
    return collapse(g, c, {{e, false}});
  }

  PathStep step(GarsideStructure const& g, DividedCategory const& c,
                std::string const& label) {
    for (std::size_t e = 0; e < c.morphisms.size(); ++e) {
      if (morphism_label(g, c, e) == label) {
        return {e, false};
      }
    }
    FAIL("no morphism " << label);
    return {};
  }
}  // namespace

TEST_CASE("decompositions") {
  auto const& g = fixtures::g12();
  auto const  d1 = decompositions(g, 1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0] == DividedTuple{g.delta()});
  CHECK(decompositions(g, 2).size() == g.size());
  for (std::size_t m = 1; m <= 4; ++m) {
    auto ts = decompositions(g, m);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    for (auto const& t : ts) {
      std::size_t len = 0;
      for (auto a : t) {
        len += g.length(a);
      }
      CHECK(len == g.delta_length());
      CHECK(is_decomposition(g, t));
    }
  }
  CHECK_THROWS_AS(decompositions(g, 0), Error);
  CHECK_THROWS_AS(decompositions(g, 4, 10), BudgetExceeded);
}

TEST_CASE("decompositions agree with brute force") {
  CHECK(decompositions(fixtures::g12(), 3) == brute_decompositions(fixtures::g12(), 3));
  CHECK(decompositions(fixtures::g12(), 4) == brute_decompositions(fixtures::g12(), 4));
  CHECK(decompositions(fixtures::g13(), 2) == brute_decompositions(fixtures::g13(), 2));
}

TEST_CASE("divided sets agree with filtering all decompositions") {
  for (auto const* pg : {&fixtures::g12(), &fixtures::g13()}) {
    auto const& g = *pg;
    for (std::size_t m = 1; m <= (g.size() < 20 ? 6 : 4); ++m) {
      auto all = decompositions(g, m);
      for (std::size_t n = 0; n <= 2 * m + 1; ++n) {
        CHECK(divided_set(g, m, n) == fixed_by_shift(g, all, n));
      }
    }
  }
}

TEST_CASE("sigma-closure and containment") {
  for (auto const* pg : {&fixtures::g12(), &fixtures::g13()}) {
    auto const& g = *pg;
    for (std::size_t m = 1; m <= 4; ++m) {
      std::size_t violations = 0;
      for (auto const& t : decompositions(g, m)) {
        if (!is_decomposition(g, twisted_shift(g, t))) {
          ++violations;
        }
      }
      CHECK(violations == 0);
      for (std::size_t n = 1; n <= 3; ++n) {
        auto small = divided_set(g, m, n);
        for (std::size_t k = 2; k <= 3; ++k) {
          auto big = divided_set(g, m, n * k);
          CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        }
      }
    }
  }
}

TEST_CASE("G12 divided sets") {
  auto const& g = fixtures::g12();
  CHECK(divided_set(g, 2, 1).empty());
  CHECK(divided_set(g, 4, 1).empty());
  auto d43 = divided_set(g, 4, 3);
  CHECK(first_entries(g, d43) == std::set<std::string>{"s", "t", "u"});
  for (auto const& t : d43) {
    CHECK(t == DividedTuple{t[0], g.phi(t[0]), g.phi(t[0], 2), t[0]});
  }
  CHECK(first_entries(g, divided_set(g, 2, 3)) == std::set<std::string>{"st", "tu", "us"});
}

TEST_CASE("G13 divided sets") {
  auto const& g = fixtures::g13();
  std::set<std::string> const three{"abc", "bca", "cab"};
  CHECK(first_entries(g, divided_set(g, 3, 2)) == three);
  CHECK(first_entries(g, divided_set(g, 3, 1)) == three);
  CHECK(divided_set(g, 1, 4) == std::vector<DividedTuple>{{g.delta()}});
}

TEST_CASE("categories with one object") {
  auto const& g = fixtures::g12();
  for (std::size_t k = 0; k <= 4; ++k) {
    auto c = build_category(g, 1, k);
    REQUIRE(c.objects.size() == 1);
    std::size_t fixed = 0;
    for (SimpleId a = 0; a < g.size(); ++a) {
      fixed += g.phi(a, static_cast<std::int64_t>(k)) == a;
    }
    CHECK(c.morphisms.size() == fixed);
    CHECK(components(c).size() == 1);
  }
}

TEST_CASE("G12 C_2^3") {
  auto const& g = fixtures::g12();
  auto const  c = build_category(g, 2, 3);
  CHECK(c.objects.size() == 3);
  CHECK(c.morphisms.size() == 9);
  std::size_t identities = 0;
  for (std::size_t e = 0; e < c.morphisms.size(); ++e) {
    auto const& t = c.morphisms[e].tuple;
    bool trivial  = t[0] == g.identity() && t[2] == g.identity();
    CHECK(c.identity[e] == trivial);
    if (trivial) {
      ++identities;
      CHECK(c.morphisms[e].source == c.morphisms[e].target);
    }
  }
  CHECK(identities == 3);
  CHECK(components(c).size() == 1);

  auto rp = reduced_presentation(c);
  CHECK(rp.generators.size() == 6);
  std::set<std::string> rels;
  for (auto const& [l, r] : rp.relations) {
    rels.insert(path_label(g, c, l) + "=" + path_label(g, c, r));
  }
  CHECK(rels == std::set<std::string>{"(s,t)(t,u)=(st,1)", "(t,u)(u,s)=(tu,1)",
                                      "(u,s)(s,t)=(us,1)"});

  CategoryPath loop{step(g, c, "(s,t)"), step(g, c, "(t,u)"), step(g, c, "(u,s)")};
  auto stu = collapse(g, c, loop);
  CHECK(to_string(g, stu) == "stu");
  CHECK(power(g, stu, 8) == delta_power(g, 6));
  CHECK(collapse(g, c, {}).is_identity());
  CHECK_THROWS_AS(collapse(g, c, {step(g, c, "(s,t)"), step(g, c, "(s,t)")}), Error);
  auto dot = to_dot(g, c);
  CHECK(dot.find("label=\"(s,t)\"") != std::string::npos);
  CHECK(dot.find("label=\"(1,st)\"") == std::string::npos);
}

TEST_CASE("G13 C_3^4") {
  auto const& g = fixtures::g13();
  auto const  c = build_category(g, 3, 4);
  CHECK(c.objects.size() == 3);
  auto rp = reduced_presentation(c);
  CHECK(rp.generators.size() == 6);
  CHECK(rp.relations.size() == 6);
  auto abc = collapse(g, c, {step(g, c, "(ab,c)"), step(g, c, "(c,ab)")});
  CHECK(to_string(g, abc) == "abc");
  CHECK(power(g, abc, 12) == delta_power(g, 4));
}

TEST_CASE("endpoints and relations are sound") {
  std::vector<std::tuple<GarsideStructure const*, std::size_t, std::size_t>> cases = {
      {&fixtures::g12(), 2, 3}, {&fixtures::g12(), 4, 3}, {&fixtures::g12(), 1, 3},
      {&fixtures::g12(), 1, 2}, {&fixtures::g13(), 3, 4}, {&fixtures::g13(), 3, 2},
      {&fixtures::g13(), 3, 1}, {&fixtures::g13(), 1, 4}, {&fixtures::g13(), 2, 1}};
  for (auto [pg, p, q] : cases) {
    auto const& g = *pg;
    auto const  c = build_category(g, p, q);
    auto const  objects = divided_set(g, p, q);
    std::size_t violations = 0;
    for (auto const& f : c.morphisms) {
      violations += !std::binary_search(objects.begin(), objects.end(), c.objects[f.source]);
      violations += !std::binary_search(objects.begin(), objects.end(), c.objects[f.target]);
    }
    for (auto const& r : c.relations) {
      auto lhs = multiply(g, collapse_of(g, c, r.first), collapse_of(g, c, r.second));
      violations += lhs != collapse_of(g, c, r.composite);
      violations += c.morphisms[r.first].target != c.morphisms[r.second].source;
    }
    CHECK(violations == 0);

    for (auto const& block : components(c)) {
      auto v = vertex_group(g, c, block.front());
      // Relators hold after collapse.
      for (auto const& rel : v.relators) {
        NormalForm x;
        for (auto a : rel) {
          auto img = v.collapse_images[generator_of(a)];
          x        = multiply(g, x, a > 0 ? img : invert(g, img));
        }
        CHECK(x.is_identity());
      }
      CHECK(v.tree_edges.size() + 1 == block.size());
    }
  }
}

TEST_CASE("loop generators commute in the cyclic cases") {
  std::vector<std::tuple<GarsideStructure const*, std::size_t, std::size_t>> cases = {
      {&fixtures::g12(), 2, 3}, {&fixtures::g13(), 3, 4}};
  for (auto [pg, p, q] : cases) {
    auto const& g = *pg;
    auto const  c = build_category(g, p, q);
    auto const  v = vertex_group(g, c, 0);
    for (auto const& x : v.collapse_images) {
      for (auto const& y : v.collapse_images) {
        CHECK(multiply(g, x, y) == multiply(g, y, x));
      }
    }
  }
}

TEST_CASE("components") {
  CHECK(components(build_category(fixtures::g12(), 4, 3)).size() == 1);
  CHECK(components(build_category(fixtures::g12(), 2, 1)).empty());
  CHECK(build_category(fixtures::g12(), 2, 1).empty());
  CHECK(components(build_category(fixtures::g13(), 3, 2)).size() == 1);
  CHECK_THROWS_AS(build_category(fixtures::g12(), 0, 1), Error);
}
