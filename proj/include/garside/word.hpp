#ifndef GARSIDE_WORD_HPP_
#define GARSIDE_WORD_HPP_

#include <cstdint>
#include <vector>

namespace garside {

  using letter_type = std::uint32_t;

  // Positive word: a sequence of generator indices. The empty word is the
  // identity of the monoid.
  using word_type = std::vector<letter_type>;

  // Word in the generators and their formal inverses. Generator i is stored
  // as i + 1 and its inverse as -(i + 1).
  using group_word = std::vector<int>;

  inline int positive_letter(letter_type x) {
    return static_cast<int>(x) + 1;
  }

  inline int inverse_letter(letter_type x) {
    return -static_cast<int>(x) - 1;
  }

  inline letter_type generator_of(int x) {
    return static_cast<letter_type>(x > 0 ? x - 1 : -x - 1);
  }

  inline group_word to_group_word(word_type const& w) {
    group_word out;
    out.reserve(w.size());
    for (auto x : w) {
      out.push_back(positive_letter(x));
    }
    return out;
  }

  inline group_word inverse(group_word const& w) {
    group_word out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = -x;
    }
    return out;
  }

  inline word_type concat(word_type const& u, word_type const& v) {
    word_type out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  inline word_type power(word_type const& u, std::size_t k) {
    word_type out;
    out.reserve(u.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), u.begin(), u.end());
    }
    return out;
  }

  // Cancels adjacent x x^-1 pairs.
  group_word free_reduce(group_word const& w);

  // Free reduction followed by cancellation around the cyclic boundary.
  group_word cyclic_reduce(group_word const& w);

}  // namespace garside

#endif  // GARSIDE_WORD_HPP_
