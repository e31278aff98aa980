#include "garside/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "garside/errors.hpp"
#include "garside/union_find.hpp"

namespace garside {

  std::size_t enumeration_budget() {
    if (char const* env = std::getenv("GARSIDE_ENUM_BUDGET")) {
      char* end   = nullptr;
      auto  value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return static_cast<std::size_t>(value);
      }
    }
    return default_enumeration_budget;
  }

  std::uint64_t CongruenceTable::encode(word_type const& w) const {
    std::uint64_t code = 0;
    for (auto x : w) {
      code = code * _base + x;
    }
    return code;
  }

  word_type CongruenceTable::decode(std::uint64_t code,
                                    std::size_t   length) const {
    word_type w(length);
    for (std::size_t i = length; i-- > 0;) {
      w[i] = static_cast<letter_type>(code % _base);
      code /= _base;
    }
    return w;
  }

  std::size_t CongruenceTable::number_of_classes(std::size_t length) const {
    return _strata.at(length).representatives.size();
  }

  std::size_t CongruenceTable::class_index(word_type const& w) const {
    if (w.size() >= _strata.size()) {
      throw Error("word of length " + std::to_string(w.size())
                  + " exceeds the table bound "
                  + std::to_string(max_length()));
    }
    for (auto x : w) {
      if (x >= _base) {
        throw Error("letter out of range in congruence lookup");
      }
    }
    return _strata[w.size()].class_of[encode(w)];
  }

  word_type CongruenceTable::representative(word_type const& w) const {
    return representative(w.size(), class_index(w));
  }

  word_type CongruenceTable::representative(std::size_t length,
                                            std::size_t index) const {
    return decode(_strata.at(length).representatives.at(index), length);
  }

  std::vector<word_type> CongruenceTable::words(std::size_t length) const {
    auto const&            stratum = _strata.at(length);
    std::vector<word_type> out;
    out.reserve(stratum.class_of.size());
    for (std::uint64_t c = 0; c < stratum.class_of.size(); ++c) {
      out.push_back(decode(c, length));
    }
    return out;
  }

  CongruenceTable congruence_classes(Presentation const& p,
                                     std::size_t         max_length,
                                     std::size_t         budget) {
    if (auto bad = validate_homogeneous(p)) {
      throw Error("congruence oracle needs a homogeneous presentation (relation "
                  + std::to_string(bad->relation) + " changes length)");
    }
    CongruenceTable table;
    table._base = p.number_of_generators();

    // Both orientations of every relation, as rewrite rules.
    std::vector<relation_type> rules;
    for (auto const& [u, v] : p.relations()) {
      if (u != v) {
        rules.emplace_back(u, v);
        rules.emplace_back(v, u);
      }
    }

    std::uint64_t count = 1;
    for (std::size_t len = 0; len <= max_length; ++len) {
      if (len > 0) {
        count *= table._base;
      }
      if (count > budget) {
        throw BudgetExceeded("length " + std::to_string(len) + " stratum has "
                             + std::to_string(count)
                             + " words, over the enumeration budget of "
                             + std::to_string(budget));
      }
      UnionFind uf(count);
      for (std::uint64_t code = 0; code < count; ++code) {
        word_type w = table.decode(code, len);
        for (auto const& [lhs, rhs] : rules) {
          if (lhs.size() > len) {
            continue;
          }
          for (std::size_t i = 0; i + lhs.size() <= len; ++i) {
            if (!std::equal(lhs.begin(), lhs.end(), w.begin() + i)) {
              continue;
            }
            word_type r = w;
            std::copy(rhs.begin(), rhs.end(), r.begin() + i);
            uf.unite(code, table.encode(r));
          }
        }
      }
      CongruenceTable::Stratum stratum;
      stratum.class_of.assign(count, 0);
      // Codes increase lexicographically, so the first code met in a block
      // is its least word.
      std::vector<std::uint32_t> index_of_root(count, UINT32_MAX);
      for (std::uint64_t code = 0; code < count; ++code) {
        auto root = uf.find(code);
        if (index_of_root[root] == UINT32_MAX) {
          index_of_root[root]
              = static_cast<std::uint32_t>(stratum.representatives.size());
          stratum.representatives.push_back(code);
        }
        stratum.class_of[code] = index_of_root[root];
      }
      table._strata.push_back(std::move(stratum));
    }
    return table;
  }

}  // namespace garside
