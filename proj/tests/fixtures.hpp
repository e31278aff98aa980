// Shared inputs and brute-force oracles for the unit tests.

#ifndef GARSIDE_TESTS_FIXTURES_HPP_
#define GARSIDE_TESTS_FIXTURES_HPP_

#include <deque>
#include <set>
#include <string>

#include "garside/normal_form.hpp"
#include "garside/presentation.hpp"
#include "garside/structure.hpp"

namespace fixtures {

  inline std::string data(std::string const& name) {
    return std::string(GARSIDE_TEST_DATA_DIR) + "/" + name;
  }

  inline garside::Presentation const& g12_presentation() {
    static auto const p = garside::read_presentation(data("g12.gar"));
    return p;
  }

  inline garside::Presentation const& g13_presentation() {
    static auto const p = garside::read_presentation(data("g13.gar"));
    return p;
  }

  inline garside::GarsideStructure const& g12() {
    static auto const g = garside::build_garside(g12_presentation());
    return g;
  }

  inline garside::GarsideStructure const& g13() {
    static auto const g = garside::build_garside(g13_presentation());
    return g;
  }

  // All words reachable from w by applying relations in either direction at
  // any position. Independent of the congruence tables.
  inline std::set<garside::word_type>
  rewrite_class(garside::Presentation const& p, garside::word_type const& w) {
    std::set<garside::word_type>   seen{w};
    std::deque<garside::word_type> todo{w};
    while (!todo.empty()) {
      auto u = todo.front();
      todo.pop_front();
      for (auto const& [l, r] : p.relations()) {
        for (auto const* side : {&l, &r}) {
          auto const& from = *side;
          auto const& to   = side == &l ? r : l;
          for (std::size_t i = 0; i + from.size() <= u.size(); ++i) {
            if (std::equal(from.begin(), from.end(), u.begin() + i)) {
              garside::word_type v(u.begin(), u.begin() + i);
              v.insert(v.end(), to.begin(), to.end());
              v.insert(v.end(), u.begin() + i + from.size(), u.end());
              if (seen.insert(v).second) {
                todo.push_back(std::move(v));
              }
            }
          }
        }
      }
    }
    return seen;
  }

  // Every word of the given length over n letters, in lexicographic order.
  inline std::vector<garside::word_type> all_words(std::size_t n,
                                                   std::size_t length) {
    std::vector<garside::word_type> out;
    garside::word_type              w(length, 0);
    while (true) {
      out.push_back(w);
      std::size_t i = length;
      while (i > 0 && w[i - 1] + 1 == n) {
        w[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++w[i - 1];
    }
  }

}  // namespace fixtures

#endif  // GARSIDE_TESTS_FIXTURES_HPP_
