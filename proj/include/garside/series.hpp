#ifndef GARSIDE_SERIES_HPP_
#define GARSIDE_SERIES_HPP_

#include <cstddef>
#include <cstdint>

#include "normal_form.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace garside {

  // Generators b1, ..., bn with
  //   b1 b2 b1 b2 = b2 b1 b2 b1,
  //   bi b(i+1) bi = b(i+1) bi b(i+1) for 2 <= i < n,
  //   bi bj = bj bi for j > i + 1,
  // and Garside word (b1 b2 ... bn)^n.
  Presentation typeb_presentation(std::size_t n);

  // Signed number of occurrences of b1.
  std::int64_t winding(group_word const& w);

  // winding(w) = 0 mod e. Throws Error unless e >= 1.
  bool is_member(group_word const& w, std::int64_t e);

  // bn ... b2 b1.
  group_word epsilon_word(std::size_t n);

  // b1^e.
  group_word z_word(std::int64_t e);

  // b1^-i b2 b1^i.
  group_word t_word(std::int64_t i);

  struct EpsilonVerdict {
    std::size_t n             = 0;
    std::size_t simple_count  = 0;
    NormalForm  epsilon_power;  // normal form of epsilon^n
    bool        equals_delta  = false;
    bool        delta_central = false;
    // For n = 2: epsilon^2 and Delta are the two sides of the first
    // relation, so the identity holds syntactically.
    bool syntactic = false;

    bool ok() const noexcept {
      return equals_delta && delta_central;
    }
  };

  // Builds the Garside structure of typeb_presentation(n) and checks
  // epsilon^n = Delta and that Delta is central. Throws AxiomViolation if the
  // structure is not Garside.
  EpsilonVerdict check_epsilon(std::size_t n);

}  // namespace garside

#endif  // GARSIDE_SERIES_HPP_
