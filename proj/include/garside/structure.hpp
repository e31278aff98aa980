#ifndef GARSIDE_STRUCTURE_HPP_
#define GARSIDE_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace garside {

  using SimpleId = std::uint32_t;

  inline constexpr SimpleId no_simple = std::numeric_limits<SimpleId>::max();

  // Outcome of checking the Garside axioms on a presentation. Each flag is
  // true when the corresponding family of checks passed; witnesses describe
  // the first failures found, in canonical order.
  struct AxiomReport {
    bool                     balanced = false;
    bool                     lattice  = false;
    bool                     phi      = false;
    std::size_t              simple_count = 0;
    std::size_t              phi_order    = 0;
    std::vector<std::string> witnesses;

    bool ok() const noexcept {
      return balanced && lattice && phi;
    }
  };

  class AxiomViolation : public Error {
   public:
    explicit AxiomViolation(AxiomReport report);

    AxiomReport const& report() const noexcept {
      return _report;
    }

   private:
    AxiomReport _report;
  };

  struct GarsideReport;

  // The simples of a Garside monoid with their division lattice and the
  // Garside automorphism, all as dense tables over SimpleId.
  //
  // Simples are numbered by (length, least representative word), so that 0
  // is the identity and size() - 1 is Delta. Every table is filled and
  // checked at construction; a built structure is immutable.
  class GarsideStructure {
   public:
    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    std::size_t size() const noexcept {
      return _words.size();
    }

    SimpleId identity() const noexcept {
      return 0;
    }

    SimpleId delta() const noexcept {
      return static_cast<SimpleId>(_words.size() - 1);
    }

    std::size_t delta_length() const noexcept {
      return _words.back().size();
    }

    std::vector<SimpleId> const& atoms() const noexcept {
      return _atoms;
    }

    SimpleId atom(letter_type x) const {
      return _atoms.at(x);
    }

    // Least representative word.
    word_type const& word(SimpleId a) const {
      return _words.at(a);
    }

    std::size_t length(SimpleId a) const {
      return _words.at(a).size();
    }

    std::string to_string(SimpleId a) const;

    // The simple represented by w, if w divides Delta.
    std::optional<SimpleId> find(word_type const& w) const;

    // The simple a*b, or no_simple if a*b does not divide Delta.
    SimpleId product(SimpleId a, SimpleId b) const {
      return _product[idx(a, b)];
    }

    // The c with a*c = b, or no_simple if a does not left-divide b.
    SimpleId left_quotient(SimpleId a, SimpleId b) const {
      return _left_quotient[idx(a, b)];
    }

    // The c with c*a = b, or no_simple if a does not right-divide b.
    SimpleId right_quotient(SimpleId a, SimpleId b) const {
      return _right_quotient[idx(a, b)];
    }

    bool left_divides(SimpleId a, SimpleId b) const {
      return left_quotient(a, b) != no_simple;
    }

    bool right_divides(SimpleId a, SimpleId b) const {
      return right_quotient(a, b) != no_simple;
    }

    // a * complement(a) = Delta.
    SimpleId complement(SimpleId a) const {
      return _left_quotient[idx(a, delta())];
    }

    // left_complement(a) * a = Delta.
    SimpleId left_complement(SimpleId a) const {
      return _right_quotient[idx(a, delta())];
    }

    // Meet and join for left divisibility (prefix order).
    SimpleId gcd_left(SimpleId a, SimpleId b) const {
      return _gcd_left[idx(a, b)];
    }

    SimpleId lcm_left(SimpleId a, SimpleId b) const {
      return _lcm_left[idx(a, b)];
    }

    // Meet and join for right divisibility (suffix order).
    SimpleId gcd_right(SimpleId a, SimpleId b) const {
      return _gcd_right[idx(a, b)];
    }

    SimpleId lcm_right(SimpleId a, SimpleId b) const {
      return _lcm_right[idx(a, b)];
    }

    // k-th power of the Garside automorphism, k of either sign.
    SimpleId phi(SimpleId a, std::int64_t k = 1) const;

    std::size_t phi_order() const noexcept {
      return _phi_order;
    }

    // Left-weighted splitting (c, d) of the product a*b: c*d = a*b with c
    // maximal, that is c = a * gcd_left(complement(a), b).
    std::pair<SimpleId, SimpleId> left_weighted(SimpleId a, SimpleId b) const {
      auto i = idx(a, b);
      return {_head[i], _tail[i]};
    }

    // No atom x with a*x <= Delta and x <= b.
    bool is_left_weighted(SimpleId a, SimpleId b) const {
      return gcd_left(complement(a), b) == identity();
    }

   private:
    friend struct StructureBuilder;
    friend GarsideReport verify_garside(Presentation const&, std::size_t);

    std::size_t idx(SimpleId a, SimpleId b) const {
      return static_cast<std::size_t>(a) * _words.size() + b;
    }

    Presentation                 _presentation;
    std::vector<word_type>       _words;
    std::map<word_type, SimpleId> _lookup;
    std::vector<SimpleId>        _atoms;
    std::vector<SimpleId>        _product;
    std::vector<SimpleId>        _left_quotient;
    std::vector<SimpleId>        _right_quotient;
    std::vector<SimpleId>        _gcd_left;
    std::vector<SimpleId>        _lcm_left;
    std::vector<SimpleId>        _gcd_right;
    std::vector<SimpleId>        _lcm_right;
    std::vector<SimpleId>        _head;
    std::vector<SimpleId>        _tail;
    std::vector<SimpleId>        _phi;
    std::size_t                  _phi_order = 1;
  };

  struct GarsideReport {
    AxiomReport                     axioms;
    std::optional<GarsideStructure> structure;
  };

  // Builds the structure and checks balancedness, the lattice property over
  // all pairs of simples, and the Garside automorphism. Never throws on an
  // axiom failure; the report says what failed. Throws BudgetExceeded when
  // the class of Delta has more than `budget` words, and Error for a
  // non-homogeneous presentation.
  GarsideReport verify_garside(Presentation const& p,
                               std::size_t budget = enumeration_budget());

  // As verify_garside, but throws AxiomViolation unless every axiom holds.
  GarsideStructure build_garside(Presentation const& p,
                                 std::size_t budget = enumeration_budget());

}  // namespace garside

#endif  // GARSIDE_STRUCTURE_HPP_
