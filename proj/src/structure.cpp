#include "garside/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "garside/normal_form.hpp"
#include "garside/union_find.hpp"

namespace garside {

  namespace {
    std::string describe(AxiomReport const& r) {
      std::string msg = "Garside axioms fail:";
      if (!r.balanced) {
        msg += " balancedness";
      }
      if (!r.lattice) {
        msg += " lattice";
      }
      if (!r.phi) {
        msg += " phi";
      }
      if (!r.witnesses.empty()) {
        msg += " (" + r.witnesses.front() + ")";
      }
      return msg;
    }

    constexpr std::size_t max_witnesses = 8;

    void witness(AxiomReport& r, std::string w) {
      if (r.witnesses.size() < max_witnesses) {
        r.witnesses.push_back(std::move(w));
      }
    }
  }  // namespace

  AxiomViolation::AxiomViolation(AxiomReport report)
      : Error(describe(report)), _report(std::move(report)) {}

  std::string GarsideStructure::to_string(SimpleId a) const {
    if (a == identity()) {
      return "1";
    }
    return _presentation.to_string(word(a));
  }

  std::optional<SimpleId> GarsideStructure::find(word_type const& w) const {
    auto it = _lookup.find(w);
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  SimpleId GarsideStructure::phi(SimpleId a, std::int64_t k) const {
    auto order = static_cast<std::int64_t>(_phi_order);
    k          = ((k % order) + order) % order;
    for (std::int64_t i = 0; i < k; ++i) {
      a = _phi[a];
    }
    return a;
  }

  struct StructureBuilder {
    GarsideStructure s;
    AxiomReport      report;

    std::string name(SimpleId a) const {
      return s.to_string(a);
    }

    std::string name(word_type const& w) const {
      return w.empty() ? std::string("1") : s._presentation.to_string(w);
    }

    // All words equal to Delta, by closure under single rewrites.
    std::set<word_type> delta_class(std::size_t budget) const {
      std::vector<relation_type> rules;
      for (auto const& [u, v] : s._presentation.relations()) {
        rules.emplace_back(u, v);
        rules.emplace_back(v, u);
      }
      std::set<word_type>   seen{s._presentation.delta()};
      std::deque<word_type> todo{s._presentation.delta()};
      while (!todo.empty()) {
        auto w = std::move(todo.front());
        todo.pop_front();
        for (auto const& [lhs, rhs] : rules) {
          for (std::size_t i = 0; i + lhs.size() <= w.size(); ++i) {
            if (!std::equal(lhs.begin(), lhs.end(), w.begin() + i)) {
              continue;
            }
            auto r = w;
            std::copy(rhs.begin(), rhs.end(), r.begin() + i);
            if (seen.insert(r).second) {
              if (seen.size() > budget) {
                throw BudgetExceeded(
                    "the class of Delta has more than "
                    + std::to_string(budget) + " words");
              }
              todo.push_back(std::move(r));
            }
          }
        }
      }
      return seen;
    }

    // Groups the words of one prefix stratum into congruence classes.
    std::vector<std::vector<word_type>>
    classes_of(std::set<word_type> const& stratum) const {
      std::vector<word_type> words(stratum.begin(), stratum.end());
      std::map<word_type, std::size_t> index;
      for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(words[i], i);
      }
      UnionFind uf(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto const& w = words[i];
        for (auto const& [u, v] : s._presentation.relations()) {
          for (auto const* lhs : {&u, &v}) {
            auto const* rhs = lhs == &u ? &v : &u;
            for (std::size_t j = 0; j + lhs->size() <= w.size(); ++j) {
              if (!std::equal(lhs->begin(), lhs->end(), w.begin() + j)) {
                continue;
              }
              auto r = w;
              std::copy(rhs->begin(), rhs->end(), r.begin() + j);
              // Divisors of Delta are closed under the congruence.
              uf.unite(i, index.at(r));
            }
          }
        }
      }
      std::map<std::size_t, std::vector<word_type>> blocks;
      for (std::size_t i = 0; i < words.size(); ++i) {
        blocks[uf.find(i)].push_back(words[i]);
      }
      std::vector<std::vector<word_type>> out;
      for (auto& [root, block] : blocks) {
        out.push_back(std::move(block));
      }
      // Words were inserted in lexicographic order, so block.front() is the
      // least representative; order classes by it.
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return x.front() < y.front();
      });
      return out;
    }

    bool balanced_divisors(std::set<word_type> const& cls) {
      auto const n = s._presentation.delta().size();
      std::vector<std::set<word_type>> prefixes(n + 1), suffixes(n + 1);
      for (auto const& w : cls) {
        for (std::size_t k = 0; k <= n; ++k) {
          prefixes[k].emplace(w.begin(), w.begin() + k);
          suffixes[k].emplace(w.end() - k, w.end());
        }
      }
      bool ok = true;
      for (std::size_t k = 0; k <= n && ok; ++k) {
        for (auto const& w : prefixes[k]) {
          if (suffixes[k].count(w) == 0) {
            witness(report,
                    name(w) + " left-divides Delta but does not right-divide it");
            ok = false;
            break;
          }
        }
        for (auto const& w : suffixes[k]) {
          if (ok && prefixes[k].count(w) == 0) {
            witness(report,
                    name(w) + " right-divides Delta but does not left-divide it");
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        return false;
      }
      std::vector<std::pair<std::size_t, word_type>> order;
      std::vector<std::vector<word_type>>            members;
      for (std::size_t k = 0; k <= n; ++k) {
        for (auto& block : classes_of(prefixes[k])) {
          order.emplace_back(k, block.front());
          members.push_back(std::move(block));
        }
      }
      // Classes were produced by length then least word already.
      for (std::size_t i = 0; i < members.size(); ++i) {
        auto id = static_cast<SimpleId>(i);
        s._words.push_back(order[i].second);
        for (auto const& w : members[i]) {
          s._lookup.emplace(w, id);
        }
      }
      return true;
    }

    bool find_atoms() {
      bool ok = true;
      for (letter_type x = 0; x < s._presentation.number_of_generators(); ++x) {
        auto a = s.find(word_type{x});
        if (!a) {
          witness(report,
                  "generator " + s._presentation.generators()[x]
                      + " does not divide Delta");
          ok = false;
          s._atoms.push_back(no_simple);
        } else {
          s._atoms.push_back(*a);
        }
      }
      return ok;
    }

    bool division_tables() {
      auto const n = s.size();
      s._product.assign(n * n, no_simple);
      s._left_quotient.assign(n * n, no_simple);
      s._right_quotient.assign(n * n, no_simple);
      bool ok = true;
      for (SimpleId a = 0; a < n; ++a) {
        for (SimpleId b = 0; b < n; ++b) {
          if (s._words[a].size() + s._words[b].size() > s.delta_length()) {
            continue;
          }
          auto p = s.find(concat(s._words[a], s._words[b]));
          if (!p) {
            continue;
          }
          s._product[s.idx(a, b)] = *p;
          auto& lq                = s._left_quotient[s.idx(a, *p)];
          auto& rq                = s._right_quotient[s.idx(b, *p)];
          if (lq != no_simple && lq != b) {
            witness(report,
                    "left cancellativity fails: " + name(a) + "*" + name(lq)
                        + " = " + name(a) + "*" + name(b));
            ok = false;
          }
          if (rq != no_simple && rq != a) {
            witness(report,
                    "right cancellativity fails: " + name(rq) + "*" + name(b)
                        + " = " + name(a) + "*" + name(b));
            ok = false;
          }
          lq = b;
          rq = a;
        }
      }
      return ok;
    }

    // Fills meet and join for one division order, given "x divides y".
    template <typename Divides>
    bool lattice_tables(Divides                divides,
                        std::vector<SimpleId>& meet,
                        std::vector<SimpleId>& join,
                        char const*            side) {
      auto const n = s.size();
      meet.assign(n * n, no_simple);
      join.assign(n * n, no_simple);
      std::vector<std::vector<SimpleId>> below(n), above(n);
      for (SimpleId x = 0; x < n; ++x) {
        for (SimpleId y = 0; y < n; ++y) {
          if (divides(x, y)) {
            below[y].push_back(x);
            above[x].push_back(y);
          }
        }
      }
      bool ok = true;
      for (SimpleId a = 0; a < n; ++a) {
        for (SimpleId b = a; b < n; ++b) {
          // Common divisors: the meet is the one all others divide.
          SimpleId best = no_simple;
          for (auto c : below[a]) {
            if (divides(c, b)
                && (best == no_simple
                    || s._words[c].size() > s._words[best].size())) {
              best = c;
            }
          }
          for (auto c : below[a]) {
            if (divides(c, b) && !divides(c, best)) {
              best = no_simple;
              break;
            }
          }
          SimpleId top = no_simple;
          for (auto c : above[a]) {
            if (divides(b, c)
                && (top == no_simple
                    || s._words[c].size() < s._words[top].size())) {
              top = c;
            }
          }
          for (auto c : above[a]) {
            if (divides(b, c) && top != no_simple && !divides(top, c)) {
              top = no_simple;
              break;
            }
          }
          if (best == no_simple || top == no_simple) {
            if (ok) {
              witness(report,
                      std::string(side) + " " + (best == no_simple ? "gcd" : "lcm")
                          + " of " + name(a) + " and " + name(b)
                          + " is not unique");
            }
            ok = false;
          }
          meet[s.idx(a, b)] = meet[s.idx(b, a)] = best;
          join[s.idx(a, b)] = join[s.idx(b, a)] = top;
        }
      }
      return ok;
    }

    bool left_weighted_tables() {
      auto const n = s.size();
      s._head.assign(n * n, no_simple);
      s._tail.assign(n * n, no_simple);
      bool ok = true;
      for (SimpleId a = 0; a < n; ++a) {
        auto da = s.complement(a);
        for (SimpleId b = 0; b < n; ++b) {
          auto g = s.gcd_left(da, b);
          auto c = s.product(a, g);
          auto d = s.left_quotient(g, b);
          if (c == no_simple || d == no_simple) {
            witness(report,
                    "no left-weighted splitting of " + name(a) + "*" + name(b));
            ok = false;
            continue;
          }
          s._head[s.idx(a, b)] = c;
          s._tail[s.idx(a, b)] = d;
        }
      }
      if (!ok) {
        return false;
      }
      for (SimpleId a = 0; a < n; ++a) {
        for (SimpleId b = 0; b < n; ++b) {
          auto [c, d] = s.left_weighted(a, b);
          if (d != s.identity() && !s.is_left_weighted(c, d)) {
            witness(report,
                    "splitting of " + name(a) + "*" + name(b)
                        + " is not left-weighted");
            return false;
          }
        }
      }
      return true;
    }

    bool garside_automorphism() {
      auto const n = s.size();
      s._phi.assign(n, no_simple);
      for (SimpleId a = 0; a < n; ++a) {
        s._phi[a] = s.complement(s.complement(a));
      }
      bool ok = true;
      std::vector<bool> hit(n, false);
      for (SimpleId a = 0; a < n; ++a) {
        if (hit[s._phi[a]]) {
          witness(report, "phi is not injective at " + name(a));
          ok = false;
        }
        hit[s._phi[a]] = true;
      }
      if (s._phi[s.identity()] != s.identity() || s._phi[s.delta()] != s.delta()) {
        witness(report, "phi does not fix 1 and Delta");
        ok = false;
      }
      for (auto x : s._atoms) {
        if (s.length(s._phi[x]) != 1) {
          witness(report, "phi(" + name(x) + ") is not an atom");
          ok = false;
        }
      }
      for (SimpleId a = 0; a < n && ok; ++a) {
        for (SimpleId b = 0; b < n; ++b) {
          auto p = s.product(a, b);
          if (p != no_simple && s.product(s._phi[a], s._phi[b]) != s._phi[p]) {
            witness(report,
                    "phi is not multiplicative on " + name(a) + "*" + name(b));
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        return false;
      }
      std::size_t order = 1;
      std::vector<bool> seen(n, false);
      for (SimpleId a = 0; a < n; ++a) {
        std::size_t len = 0;
        for (auto x = a; !seen[x]; x = s._phi[x]) {
          seen[x] = true;
          ++len;
        }
        if (len > 0) {
          order = std::lcm(order, len);
        }
      }
      s._phi_order = order;
      return true;
    }

    // Delta phi(x) = x Delta, compared through normal forms of positive
    // words; positive normalization never consults phi.
    bool twist_identity() {
      auto const& dw = s.word(s.delta());
      for (SimpleId x = 0; x < s.size(); ++x) {
        auto lhs = normal_form(s, concat(dw, s.word(s._phi[x])));
        auto rhs = normal_form(s, concat(s.word(x), dw));
        if (lhs != rhs) {
          witness(report, "Delta*phi(" + name(x) + ") != " + name(x) + "*Delta");
          return false;
        }
      }
      return true;
    }
  };

  GarsideReport verify_garside(Presentation const& p, std::size_t budget) {
    if (auto bad = validate_homogeneous(p)) {
      throw Error("presentation is not homogeneous: relation "
                  + std::to_string(bad->relation) + " has sides of length "
                  + std::to_string(bad->lhs_length) + " and "
                  + std::to_string(bad->rhs_length));
    }
    StructureBuilder b;
    b.s._presentation = p;
    GarsideReport out;

    auto cls = b.delta_class(budget);
    b.report.balanced = b.balanced_divisors(cls);
    if (b.report.balanced) {
      b.report.balanced = b.find_atoms();
    }
    b.report.simple_count = b.s.size();
    if (!b.report.balanced) {
      out.axioms = std::move(b.report);
      return out;
    }
    bool lattice = b.division_tables();
    lattice = b.lattice_tables(
                  [&](SimpleId x, SimpleId y) { return b.s.left_divides(x, y); },
                  b.s._gcd_left,
                  b.s._lcm_left,
                  "left")
              && lattice;
    lattice = b.lattice_tables(
                  [&](SimpleId x, SimpleId y) { return b.s.right_divides(x, y); },
                  b.s._gcd_right,
                  b.s._lcm_right,
                  "right")
              && lattice;
    b.report.lattice = lattice && b.left_weighted_tables();
    if (b.report.lattice) {
      b.report.phi = b.garside_automorphism() && b.twist_identity();
      b.report.phi_order = b.s.phi_order();
    }
    out.axioms = std::move(b.report);
    if (out.axioms.ok()) {
      out.structure = std::move(b.s);
    }
    return out;
  }

  GarsideStructure build_garside(Presentation const& p, std::size_t budget) {
    auto r = verify_garside(p, budget);
    if (!r.axioms.ok()) {
      throw AxiomViolation(std::move(r.axioms));
    }
    return std::move(*r.structure);
  }

}  // namespace garside
