#include "garside/tietze.hpp"

#include <algorithm>
#include <optional>

namespace garside {

  namespace {
    group_word substitute(group_word const&              w,
                          std::size_t                    x,
                          group_word const&              value) {
      group_word out;
      auto const inv = inverse(value);
      for (auto a : w) {
        if (generator_of(a) != x) {
          out.push_back(a);
        } else {
          auto const& v = a > 0 ? value : inv;
          out.insert(out.end(), v.begin(), v.end());
        }
      }
      return out;
    }

    struct Move {
      std::size_t relator;
      std::size_t position;
    };

    std::optional<Move> find_move(std::vector<group_word> const& rels) {
      std::vector<std::size_t> order(rels.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
        return rels[i].size() < rels[j].size();
      });
      for (auto i : order) {
        auto const& r = rels[i];
        std::optional<Move> best;
        for (std::size_t k = 0; k < r.size(); ++k) {
          auto x     = generator_of(r[k]);
          auto count = std::count_if(r.begin(), r.end(), [&](int a) {
            return generator_of(a) == x;
          });
          if (count == 1
              && (!best || x < generator_of(r[best->position]))) {
            best = Move{i, k};
          }
        }
        if (best) {
          return best;
        }
      }
      return std::nullopt;
    }

    void normalize(std::vector<group_word>& rels) {
      std::vector<group_word> out;
      for (auto& r : rels) {
        auto c = cyclic_reduce(r);
        if (!c.empty() && std::find(out.begin(), out.end(), c) == out.end()) {
          out.push_back(std::move(c));
        }
      }
      rels = std::move(out);
    }
  }  // namespace

  SimplifiedPresentation simplify_presentation(std::size_t             n,
                                               std::vector<group_word> rels) {
    SimplifiedPresentation out;
    out.expressions.resize(n);
    std::vector<bool> alive(n, true);
    for (std::size_t x = 0; x < n; ++x) {
      out.expressions[x] = {positive_letter(static_cast<letter_type>(x))};
    }
    normalize(rels);
    std::size_t const bound = 10 * (n + rels.size());
    while (true) {
      auto move = find_move(rels);
      if (!move) {
        break;
      }
      if (out.passes == bound) {
        out.bound_hit = true;
        break;
      }
      ++out.passes;
      // Rotate the relator to x^e w, so that x = w^-1 (e = 1) or x = w.
      auto r = rels[move->relator];
      std::rotate(r.begin(), r.begin() + move->position, r.end());
      auto       x = generator_of(r.front());
      group_word w(r.begin() + 1, r.end());
      auto value = free_reduce(r.front() > 0 ? inverse(w) : w);
      rels.erase(rels.begin() + move->relator);
      for (auto& s : rels) {
        s = substitute(s, x, value);
      }
      for (auto& e : out.expressions) {
        e = free_reduce(substitute(e, x, value));
      }
      alive[x] = false;
      normalize(rels);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (alive[x]) {
        out.generators.push_back(x);
      }
    }
    out.relators = std::move(rels);
    return out;
  }

  SimplifiedPresentation simplify_presentation(VertexGroupPresentation const& v) {
    return simplify_presentation(v.generators.size(), v.relators);
  }

}  // namespace garside
