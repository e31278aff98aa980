#ifndef GARSIDE_NORMAL_FORM_HPP_
#define GARSIDE_NORMAL_FORM_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "structure.hpp"
#include "word.hpp"

namespace garside {

  // Left normal form Delta^delta_power * factors[0] * ... * factors[k-1]:
  // every factor is a proper simple (neither 1 nor Delta) and every adjacent
  // pair is left-weighted. Group elements may have a negative Delta power.
  struct NormalForm {
    std::int64_t          delta_power = 0;
    std::vector<SimpleId> factors;

    bool is_identity() const noexcept {
      return delta_power == 0 && factors.empty();
    }

    bool is_delta_power() const noexcept {
      return factors.empty();
    }

    auto operator<=>(NormalForm const&) const = default;
  };

  NormalForm delta_power(GarsideStructure const& g, std::int64_t k);

  NormalForm simple_normal_form(GarsideStructure const& g, SimpleId a);

  // Normal form of a positive word.
  NormalForm normal_form(GarsideStructure const& g, word_type const& w);

  // Normal form of a word in the generators and their inverses.
  NormalForm normal_form(GarsideStructure const& g, group_word const& w);

  // Normal form of a product of simples, in order.
  NormalForm product_normal_form(GarsideStructure const&      g,
                                 std::vector<SimpleId> const& simples);

  NormalForm multiply(GarsideStructure const& g,
                      NormalForm const&       x,
                      NormalForm const&       y);

  NormalForm invert(GarsideStructure const& g, NormalForm const& x);

  NormalForm power(GarsideStructure const& g, NormalForm const& x, std::int64_t k);

  // x commutes with every atom.
  bool is_central(GarsideStructure const& g, NormalForm const& x);

  NormalForm phi_apply(GarsideStructure const& g,
                       NormalForm const&       x,
                       std::int64_t            k);

  // Value of the length morphism; negative for some group elements.
  std::int64_t length(GarsideStructure const& g, NormalForm const& x);

  // A word representing x, inverses only in front (Delta^-k).
  group_word to_word(GarsideStructure const& g, NormalForm const& x);

  // For example "Delta^3", "Delta^-1.stu.s", "1".
  std::string to_string(GarsideStructure const& g, NormalForm const& x);

}  // namespace garside

#endif  // GARSIDE_NORMAL_FORM_HPP_
