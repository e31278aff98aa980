#include "garside/divided.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>

#include "garside/errors.hpp"
#include "garside/union_find.hpp"

namespace garside {

  DividedTuple twisted_shift(GarsideStructure const& g,
                             DividedTuple const&     t,
                             std::size_t             times) {
    DividedTuple out = t;
    for (std::size_t k = 0; k < times && !out.empty(); ++k) {
      auto first = out.front();
      std::rotate(out.begin(), out.begin() + 1, out.end());
      out.back() = g.phi(first);
    }
    return out;
  }

  bool is_decomposition(GarsideStructure const& g, DividedTuple const& t) {
    auto nf = product_normal_form(g, t);
    return nf.delta_power == 1 && nf.factors.empty();
  }

  namespace {
    class TupleSearch {
     public:
      TupleSearch(GarsideStructure const& g,
                  std::size_t             m,
                  std::optional<std::size_t> n,
                  std::size_t             budget)
          : _g(g), _m(m), _budget(budget), _tuple(m) {
        // divisors[r]: the simples left-dividing r, increasing.
        _divisors.resize(g.size());
        for (SimpleId r = 0; r < g.size(); ++r) {
          for (SimpleId a = 0; a < g.size(); ++a) {
            if (g.left_divides(a, r)) {
              _divisors[r].push_back(a);
            }
          }
        }
        _constraints.resize(m);
        if (n) {
          // Fixed points of the n-th shift: a_i = phi^e(a_k) with
          // k = (i + n) mod m and e = (i + n) div m. Each equation is checked
          // at the later of its two positions.
          for (std::size_t i = 0; i < m; ++i) {
            auto k = (i + *n) % m;
            auto e = static_cast<std::int64_t>((i + *n) / m);
            if (k <= i) {
              _constraints[i].push_back({k, e});
            } else {
              _constraints[k].push_back({i, -e});
            }
          }
        }
      }

      std::vector<DividedTuple> run() {
        if (_m > 0) {
          search(0, _g.delta());
        }
        return std::move(_out);
      }

     private:
      // At position j: a_j = phi^e(a_other) (other <= j; other == j means a
      // self-constraint).
      struct Constraint {
        std::size_t  other;
        std::int64_t exponent;
      };

      bool consistent(std::size_t j, SimpleId a) const {
        for (auto const& c : _constraints[j]) {
          auto rhs = c.other == j ? a : _tuple[c.other];
          if (a != _g.phi(rhs, c.exponent)) {
            return false;
          }
        }
        return true;
      }

      void emit() {
        if (_out.size() >= _budget) {
          throw BudgetExceeded("more than " + std::to_string(_budget)
                               + " decompositions of Delta into "
                               + std::to_string(_m) + " simples");
        }
        _out.push_back(_tuple);
      }

      void search(std::size_t j, SimpleId rest) {
        if (j + 1 == _m) {
          if (consistent(j, rest)) {
            _tuple[j] = rest;
            emit();
          }
          return;
        }
        std::optional<SimpleId> forced;
        for (auto const& c : _constraints[j]) {
          if (c.other < j) {
            forced = _g.phi(_tuple[c.other], c.exponent);
            break;
          }
        }
        if (forced) {
          if (_g.left_divides(*forced, rest) && consistent(j, *forced)) {
            _tuple[j] = *forced;
            search(j + 1, _g.left_quotient(*forced, rest));
          }
          return;
        }
        for (auto a : _divisors[rest]) {
          if (consistent(j, a)) {
            _tuple[j] = a;
            search(j + 1, _g.left_quotient(a, rest));
          }
        }
      }

      GarsideStructure const&               _g;
      std::size_t                           _m;
      std::size_t                           _budget;
      DividedTuple                          _tuple;
      std::vector<std::vector<SimpleId>>    _divisors;
      std::vector<std::vector<Constraint>>  _constraints;
      std::vector<DividedTuple>             _out;
    };

    DividedTuple pair_products(GarsideStructure const& g,
                               DividedTuple const&     t,
                               std::size_t             offset) {
      // (t[o] t[o+1], t[o+2] t[o+3], ...) reading t cyclically with the
      // wrapped entries twisted by phi.
      auto const   m = t.size();
      DividedTuple out;
      for (std::size_t i = offset; i < m + offset; i += 2) {
        auto x = i < m ? t[i] : g.phi(t[i - m]);
        auto y = i + 1 < m ? t[i + 1] : g.phi(t[i + 1 - m]);
        auto p = g.product(x, y);
        if (p == no_simple) {
          throw Error("internal error: adjacent entries of a decomposition "
                      "do not multiply to a simple");
        }
        out.push_back(p);
      }
      return out;
    }

    CategoryPath inverse_path(CategoryPath const& path) {
      CategoryPath out(path.rbegin(), path.rend());
      for (auto& s : out) {
        s.inverse = !s.inverse;
      }
      return out;
    }
  }  // namespace

  std::vector<DividedTuple> decompositions(GarsideStructure const& g,
                                           std::size_t             m,
                                           std::size_t             budget) {
    if (m == 0) {
      throw Error("decompositions need m >= 1");
    }
    return TupleSearch(g, m, std::nullopt, budget).run();
  }

  std::vector<DividedTuple> divided_set(GarsideStructure const& g,
                                        std::size_t             m,
                                        std::size_t             n,
                                        std::size_t             budget) {
    if (m == 0) {
      throw Error("divided sets need m >= 1");
    }
    return TupleSearch(g, m, n, budget).run();
  }

  std::size_t DividedCategory::object_index(DividedTuple const& t) const {
    auto it = _object_index.find(t);
    if (it == _object_index.end()) {
      throw Error("tuple is not an object of the divided category");
    }
    return it->second;
  }

  std::size_t DividedCategory::morphism_index(DividedTuple const& t) const {
    auto it = _morphism_index.find(t);
    if (it == _morphism_index.end()) {
      throw Error("tuple is not a morphism of the divided category");
    }
    return it->second;
  }

  DividedCategory build_category(GarsideStructure const& g,
                                 std::size_t             p,
                                 std::size_t             q,
                                 std::size_t             budget) {
    if (p == 0) {
      throw Error("divided categories need p >= 1");
    }
    DividedCategory c;
    c.p       = p;
    c.q       = q;
    c.objects = divided_set(g, p, q, budget);
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
      c._object_index.emplace(c.objects[i], i);
    }
    if (c.objects.empty()) {
      return c;
    }
    auto endpoint = [&](DividedTuple const& t) {
      auto it = c._object_index.find(t);
      if (it == c._object_index.end()) {
        throw Error("internal error: dangling endpoint in divided category");
      }
      return it->second;
    };
    for (auto& t : divided_set(g, 2 * p, 2 * q, budget)) {
      DividedMorphism f;
      f.source = endpoint(pair_products(g, t, 0));
      f.target = endpoint(pair_products(g, t, 1));
      c._morphism_index.emplace(t, c.morphisms.size());
      f.tuple = std::move(t);
      c.morphisms.push_back(std::move(f));
    }
    auto morphism = [&](DividedTuple const& t) {
      auto it = c._morphism_index.find(t);
      if (it == c._morphism_index.end()) {
        throw Error("internal error: relation refers to a missing morphism");
      }
      return it->second;
    };
    c.identity.assign(c.morphisms.size(), false);
    for (auto const& t : divided_set(g, 3 * p, 3 * q, budget)) {
      DividedTuple f, s, h;
      auto         at = [&](std::size_t i) {
        return i < t.size() ? t[i] : g.phi(t[i - t.size()]);
      };
      for (std::size_t i = 0; i < p; ++i) {
        f.push_back(at(3 * i));
        f.push_back(g.product(at(3 * i + 1), at(3 * i + 2)));
        s.push_back(at(3 * i + 1));
        s.push_back(g.product(at(3 * i + 2), at(3 * i + 3)));
        h.push_back(g.product(at(3 * i), at(3 * i + 1)));
        h.push_back(at(3 * i + 2));
      }
      DividedRelation r{morphism(f), morphism(s), morphism(h)};
      if (r.first == r.second && r.second == r.composite) {
        c.identity[r.first] = true;
      }
      c.relations.push_back(r);
    }
    for (auto const& r : c.relations) {
      auto const& f = c.morphisms[r.first];
      auto const& s = c.morphisms[r.second];
      auto const& h = c.morphisms[r.composite];
      if (f.target != s.source || f.source != h.source
          || s.target != h.target) {
        throw Error("internal error: relation endpoints do not match");
      }
    }
    return c;
  }

  std::vector<std::vector<std::size_t>> components(DividedCategory const& c) {
    UnionFind uf(c.objects.size());
    for (auto const& f : c.morphisms) {
      uf.unite(f.source, f.target);
    }
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
      blocks[uf.find(i)].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, block] : blocks) {
      out.push_back(std::move(block));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t path_start(DividedCategory const& c, PathStep const& s) {
    auto const& f = c.morphisms.at(s.morphism);
    return s.inverse ? f.target : f.source;
  }

  std::size_t path_end(DividedCategory const& c, PathStep const& s) {
    auto const& f = c.morphisms.at(s.morphism);
    return s.inverse ? f.source : f.target;
  }

  NormalForm collapse(GarsideStructure const& g,
                      DividedCategory const&  c,
                      CategoryPath const&     path) {
    NormalForm out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0 && path_end(c, path[i - 1]) != path_start(c, path[i])) {
        throw Error("path is not composable at step " + std::to_string(i));
      }
      auto head = simple_normal_form(g, c.morphisms[path[i].morphism].tuple[0]);
      out = multiply(g, out, path[i].inverse ? invert(g, head) : head);
    }
    return out;
  }

  CategoryPresentation reduced_presentation(DividedCategory const& c) {
    CategoryPresentation out;
    std::vector<bool>    alive(c.morphisms.size(), false);
    for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
      alive[i] = !c.identity[i];
    }
    auto strip = [&](CategoryPath path) {
      std::erase_if(path, [&](PathStep const& s) {
        return c.identity[s.morphism];
      });
      return path;
    };
    std::vector<std::pair<CategoryPath, CategoryPath>> rels;
    for (auto const& r : c.relations) {
      auto lhs = strip(CategoryPath{PathStep{r.first}, PathStep{r.second}});
      auto rhs = strip(CategoryPath{PathStep{r.composite}});
      if (lhs != rhs) {
        rels.emplace_back(std::move(lhs), std::move(rhs));
      }
    }
    for (std::size_t h = 0; h < c.morphisms.size(); ++h) {
      auto const& f = c.morphisms[h];
      if (!alive[h] || f.source != f.target) {
        continue;
      }
      auto def = std::find_if(rels.begin(), rels.end(), [&](auto const& r) {
        return r.second == CategoryPath{PathStep{h}};
      });
      if (def == rels.end()) {
        continue;
      }
      auto replacement = def->first;
      rels.erase(def);
      auto substitute  = [&](CategoryPath const& path) {
        CategoryPath res;
        for (auto const& s : path) {
          if (s.morphism != h) {
            res.push_back(s);
          } else {
            auto rep = s.inverse ? inverse_path(replacement) : replacement;
            res.insert(res.end(), rep.begin(), rep.end());
          }
        }
        return res;
      };
      std::vector<std::pair<CategoryPath, CategoryPath>> next;
      for (auto& [lhs, rhs] : rels) {
        auto l = substitute(lhs);
        auto r = substitute(rhs);
        if (l != r) {
          next.emplace_back(std::move(l), std::move(r));
        }
      }
      rels     = std::move(next);
      alive[h] = false;
    }
    for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
      if (alive[i]) {
        out.generators.push_back(i);
      }
    }
    out.relations = std::move(rels);
    return out;
  }

  VertexGroupPresentation vertex_group(GarsideStructure const& g,
                                       DividedCategory const&  c,
                                       std::size_t             base) {
    if (base >= c.objects.size()) {
      throw Error("base object out of range");
    }
    VertexGroupPresentation out;
    out.base = base;

    std::vector<bool> in_component(c.objects.size(), false);
    for (auto const& block : components(c)) {
      if (std::find(block.begin(), block.end(), base) != block.end()) {
        for (auto x : block) {
          in_component[x] = true;
        }
      }
    }

    UnionFind         uf(c.objects.size());
    std::vector<bool> tree(c.morphisms.size(), false);
    for (std::size_t e = 0; e < c.morphisms.size(); ++e) {
      auto const& f = c.morphisms[e];
      if (in_component[f.source] && uf.unite(f.source, f.target)) {
        tree[e] = true;
        out.tree_edges.push_back(e);
      }
    }

    // to_object[v]: tree path from base to v.
    std::vector<std::optional<CategoryPath>> to_object(c.objects.size());
    to_object[base] = CategoryPath{};
    std::deque<std::size_t> todo{base};
    while (!todo.empty()) {
      auto v = todo.front();
      todo.pop_front();
      for (auto e : out.tree_edges) {
        auto const& f = c.morphisms[e];
        for (bool inv : {false, true}) {
          PathStep s{e, inv};
          if (path_start(c, s) == v && !to_object[path_end(c, s)]) {
            auto path = *to_object[v];
            path.push_back(s);
            to_object[path_end(c, s)] = std::move(path);
            todo.push_back(path_end(c, s));
          }
        }
        (void) f;
      }
    }

    std::vector<int> letter(c.morphisms.size(), 0);
    for (std::size_t e = 0; e < c.morphisms.size(); ++e) {
      auto const& f = c.morphisms[e];
      if (!in_component[f.source] || tree[e]) {
        continue;
      }
      LoopGenerator gen;
      gen.morphism = e;
      gen.loop     = *to_object[f.source];
      gen.loop.push_back({e, false});
      auto back = inverse_path(*to_object[f.target]);
      gen.loop.insert(gen.loop.end(), back.begin(), back.end());
      out.collapse_images.push_back(collapse(g, c, gen.loop));
      out.generators.push_back(std::move(gen));
      letter[e] = static_cast<int>(out.generators.size());
    }

    for (auto const& r : c.relations) {
      if (!in_component[c.morphisms[r.first].source]) {
        continue;
      }
      group_word w;
      for (auto e : {r.first, r.second}) {
        if (letter[e] != 0) {
          w.push_back(letter[e]);
        }
      }
      if (letter[r.composite] != 0) {
        w.push_back(-letter[r.composite]);
      }
      out.relators.push_back(std::move(w));
    }
    return out;
  }

  std::string object_label(GarsideStructure const& g,
                           DividedCategory const&  c,
                           std::size_t             object) {
    return g.to_string(c.objects.at(object).at(0));
  }

  std::string morphism_label(GarsideStructure const& g,
                             DividedCategory const&  c,
                             std::size_t             morphism) {
    auto const& t = c.morphisms.at(morphism).tuple;
    return "(" + g.to_string(t.at(0)) + "," + g.to_string(t.at(1)) + ")";
  }

  std::string path_label(GarsideStructure const& g,
                         DividedCategory const&  c,
                         CategoryPath const&     path) {
    if (path.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : path) {
      out += morphism_label(g, c, s.morphism);
      if (s.inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  std::string to_dot(GarsideStructure const& g, DividedCategory const& c) {
    std::ostringstream out;
    out << "digraph C_" << c.p << "_" << c.q << " {\n";
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
      out << "  o" << i << " [label=\"" << object_label(g, c, i) << "\"];\n";
    }
    for (std::size_t e = 0; e < c.morphisms.size(); ++e) {
      if (c.identity[e]) {
        continue;
      }
      auto const& f = c.morphisms[e];
      out << "  o" << f.source << " -> o" << f.target << " [label=\""
          << morphism_label(g, c, e) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace garside
