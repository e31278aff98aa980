#ifndef GARSIDE_DIVIDED_HPP_
#define GARSIDE_DIVIDED_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "normal_form.hpp"
#include "structure.hpp"
#include "word.hpp"

namespace garside {

  // (a_1, ..., a_m) with a_1 * ... * a_m = Delta.
  using DividedTuple = std::vector<SimpleId>;

  // Twisted cyclic shift (a_1, ..., a_m) -> (a_2, ..., a_m, phi(a_1)),
  // applied `times` times.
  DividedTuple twisted_shift(GarsideStructure const& g,
                             DividedTuple const&     t,
                             std::size_t             times = 1);

  bool is_decomposition(GarsideStructure const& g, DividedTuple const& t);

  // Every m-tuple of simples with product Delta, in lexicographic order of
  // simple ids. Throws BudgetExceeded past `budget` tuples.
  std::vector<DividedTuple> decompositions(GarsideStructure const& g,
                                           std::size_t             m,
                                           std::size_t budget = 10'000'000);

  // The decompositions fixed by the n-th power of the twisted shift, sorted.
  // The search only extends partial tuples that are consistent with the
  // fixed-point equations, so it stays small even for large m.
  std::vector<DividedTuple> divided_set(GarsideStructure const& g,
                                        std::size_t             m,
                                        std::size_t             n,
                                        std::size_t budget = 10'000'000);

  struct DividedMorphism {
    DividedTuple tuple;
    std::size_t  source;
    std::size_t  target;
  };

  // first then second (diagrammatic order) equals composite.
  struct DividedRelation {
    std::size_t first;
    std::size_t second;
    std::size_t composite;
  };

  // Objects are D_p^q, generating morphisms D_{2p}^{2q} and relations come
  // from D_{3p}^{3q}.
  class DividedCategory {
   public:
    std::size_t p = 0;
    std::size_t q = 0;

    std::vector<DividedTuple>    objects;
    std::vector<DividedMorphism> morphisms;
    std::vector<DividedRelation> relations;

    // Morphisms (1, b_1, 1, b_2, ..., 1, b_p): the identity at object b. Each
    // one satisfies f * f = f among the relations.
    std::vector<bool> identity;

    std::size_t object_index(DividedTuple const& t) const;
    std::size_t morphism_index(DividedTuple const& t) const;

    bool empty() const noexcept {
      return objects.empty();
    }

   private:
    friend DividedCategory build_category(GarsideStructure const&,
                                          std::size_t,
                                          std::size_t,
                                          std::size_t);
    std::map<DividedTuple, std::size_t> _object_index;
    std::map<DividedTuple, std::size_t> _morphism_index;
  };

  DividedCategory build_category(GarsideStructure const& g,
                                 std::size_t             p,
                                 std::size_t             q,
                                 std::size_t budget = 10'000'000);

  // Connected components of the underlying undirected graph. Each block is
  // sorted; blocks are ordered by their least object.
  std::vector<std::vector<std::size_t>>
  components(DividedCategory const& c);

  struct PathStep {
    std::size_t morphism;
    bool        inverse = false;

    bool operator==(PathStep const&) const = default;
  };

  using CategoryPath = std::vector<PathStep>;

  std::size_t path_start(DividedCategory const& c, PathStep const& s);
  std::size_t path_end(DividedCategory const& c, PathStep const& s);

  // Image of a path of the enveloping groupoid under (a_1, ..., a_2p) -> a_1.
  // Throws Error if consecutive steps do not compose.
  NormalForm collapse(GarsideStructure const& g,
                      DividedCategory const&  c,
                      CategoryPath const&     path);

  // A presentation of the category for display: identity morphisms and the
  // relations they make trivial are removed, and every loop morphism that is
  // the composite of some relation is eliminated by substituting its first
  // defining relation into the others.
  struct CategoryPresentation {
    std::vector<std::size_t>                              generators;
    std::vector<std::pair<CategoryPath, CategoryPath>>    relations;
  };

  CategoryPresentation reduced_presentation(DividedCategory const& c);

  struct LoopGenerator {
    std::size_t  morphism;
    CategoryPath loop;  // tree path to the source, the morphism, tree path back
  };

  // Presentation of the vertex group at `base`, obtained by contracting a
  // spanning tree of its component. Relator letters index `generators`
  // (generator i is i + 1, its inverse -(i + 1)).
  struct VertexGroupPresentation {
    std::size_t                base = 0;
    std::vector<std::size_t>   tree_edges;
    std::vector<LoopGenerator> generators;
    std::vector<group_word>    relators;
    std::vector<NormalForm>    collapse_images;
  };

  // The tree is grown from `base` taking edges in increasing morphism order.
  VertexGroupPresentation vertex_group(GarsideStructure const& g,
                                       DividedCategory const&  c,
                                       std::size_t             base);

  // Parametrization used in reports: the first entry of an object, the first
  // two entries of a morphism, e.g. "st" and "(s,t)".
  std::string object_label(GarsideStructure const& g,
                           DividedCategory const&  c,
                           std::size_t             object);
  std::string morphism_label(GarsideStructure const& g,
                             DividedCategory const&  c,
                             std::size_t             morphism);
  std::string path_label(GarsideStructure const& g,
                         DividedCategory const&  c,
                         CategoryPath const&     path);

  // Graphviz rendering of objects and non-identity morphisms.
  std::string to_dot(GarsideStructure const& g, DividedCategory const& c);

}  // namespace garside

#endif  // GARSIDE_DIVIDED_HPP_
