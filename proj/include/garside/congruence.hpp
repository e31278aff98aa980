#ifndef GARSIDE_CONGRUENCE_HPP_
#define GARSIDE_CONGRUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace garside {

  // 3^10 words per length stratum.
  inline constexpr std::size_t default_enumeration_budget = 59049;

  // default_enumeration_budget unless the environment variable
  // GARSIDE_ENUM_BUDGET holds a positive integer.
  std::size_t enumeration_budget();

  // Brute-force partition of all positive words of length <= max_length into
  // classes of the congruence generated by the relations. Classes within a
  // stratum are numbered in increasing order of their representative, which
  // is the lexicographically least word of the class (generator order).
  class CongruenceTable {
   public:
    std::size_t max_length() const noexcept {
      return _strata.size() - 1;
    }

    std::size_t number_of_classes(std::size_t length) const;

    // Index of the class of w within its length stratum.
    std::size_t class_index(word_type const& w) const;

    word_type representative(word_type const& w) const;

    word_type representative(std::size_t length, std::size_t index) const;

    bool equivalent(word_type const& u, word_type const& v) const {
      return u.size() == v.size() && class_index(u) == class_index(v);
    }

    // Every word of the given length, in lexicographic order.
    std::vector<word_type> words(std::size_t length) const;

   private:
    friend CongruenceTable congruence_classes(Presentation const&,
                                              std::size_t,
                                              std::size_t);

    struct Stratum {
      std::vector<std::uint32_t> class_of;
      std::vector<std::uint64_t> representatives;
    };

    std::uint64_t encode(word_type const& w) const;
    word_type     decode(std::uint64_t code, std::size_t length) const;

    std::size_t          _base = 0;
    std::vector<Stratum> _strata;
  };

  // Requires a homogeneous presentation. Throws BudgetExceeded if some
  // stratum has more than `budget` words.
  CongruenceTable congruence_classes(Presentation const& p,
                                     std::size_t         max_length,
                                     std::size_t budget = enumeration_budget());

}  // namespace garside

#endif  // GARSIDE_CONGRUENCE_HPP_
