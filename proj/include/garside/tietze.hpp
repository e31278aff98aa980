#ifndef GARSIDE_TIETZE_HPP_
#define GARSIDE_TIETZE_HPP_

#include <cstddef>
#include <vector>

#include "divided.hpp"
#include "word.hpp"

namespace garside {

  // Result of simplify_presentation. Surviving generators keep their
  // original numbering, and so do the letters of the remaining relators.
  struct SimplifiedPresentation {
    std::vector<std::size_t> generators;
    std::vector<group_word>  relators;
    std::size_t              passes = 0;
    // True when the pass bound stopped the simplification.
    bool bound_hit = false;
    // For each original generator, its value as a word in the survivors.
    std::vector<group_word> expressions;

    // At most one generator left: the group is cyclic.
    bool conclusive() const noexcept {
      return generators.size() <= 1;
    }

    bool is_infinite_cyclic() const noexcept {
      return generators.size() == 1 && relators.empty();
    }

    bool is_trivial() const noexcept {
      return generators.empty();
    }
  };

  // Tietze moves: cyclic reduction of relators, then repeatedly eliminate a
  // generator occurring exactly once in some relator (shortest relator first,
  // then smallest generator). A relator of length one kills an idempotent
  // generator. At most 10 * (generators + relators) passes.
  SimplifiedPresentation simplify_presentation(std::size_t             number_of_generators,
                                               std::vector<group_word> relators);

  SimplifiedPresentation simplify_presentation(VertexGroupPresentation const& v);

}  // namespace garside

#endif  // GARSIDE_TIETZE_HPP_
