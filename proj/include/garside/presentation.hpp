#ifndef GARSIDE_PRESENTATION_HPP_
#define GARSIDE_PRESENTATION_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "word.hpp"

namespace garside {

  using relation_type = std::pair<word_type, word_type>;

  // A finitely presented monoid together with a designated Garside word.
  //
  // The constructor checks that the generator list is non-empty and
  // duplicate-free and that every letter of every relation and of the Garside
  // word is a declared generator. Homogeneity is checked separately by
  // validate_homogeneous, so that a length-changing relation can still be
  // parsed and reported on.
  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::vector<std::string>   generators,
                 std::vector<relation_type> relations,
                 word_type                  delta);

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }

    std::size_t number_of_generators() const noexcept {
      return _generators.size();
    }

    std::vector<relation_type> const& relations() const noexcept {
      return _relations;
    }

    word_type const& delta() const noexcept {
      return _delta;
    }

    // Throws ParseError for an undeclared name.
    letter_type letter(std::string_view name) const;

    // Whitespace separated generator names; an empty string is the empty
    // word.
    word_type parse_word(std::string_view text) const;

    // As parse_word, but a name may carry a "^-1" suffix.
    group_word parse_group_word(std::string_view text) const;

    // Concatenates names when every generator name is a single character
    // ("stus"), otherwise separates them with spaces ("b1 b2").
    std::string to_string(word_type const& w) const;
    std::string to_string(group_word const& w) const;

   private:
    std::vector<std::string>                     _generators;
    std::vector<relation_type>                   _relations;
    word_type                                    _delta;
    std::unordered_map<std::string, letter_type> _index;
    bool                                         _compact = true;
  };

  // Reads the `.gar` format:
  //
  //   # comment
  //   gens: s t u
  //   rel: s t u s = t u s t
  //   delta: s t u s
  //
  // Exactly one `gens:` and one `delta:` line; `rel:` lines keep their order.
  Presentation parse_presentation(std::string_view text);

  // Throws InputError if the file cannot be read.
  Presentation read_presentation(std::filesystem::path const& path);

  struct HomogeneityViolation {
    std::size_t relation;
    std::size_t lhs_length;
    std::size_t rhs_length;
  };

  // Empty iff every relation preserves length.
  std::optional<HomogeneityViolation>
  validate_homogeneous(Presentation const& p);

}  // namespace garside

#endif  // GARSIDE_PRESENTATION_HPP_
