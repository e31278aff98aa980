#ifndef GARSIDE_PERIODIC_HPP_
#define GARSIDE_PERIODIC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divided.hpp"
#include "errors.hpp"
#include "normal_form.hpp"
#include "structure.hpp"
#include "tietze.hpp"

namespace garside {

  // gamma^p = Delta^q.
  struct PeriodicPair {
    std::int64_t p = 1;
    std::int64_t q = 0;

    bool reduced() const;
  };

  // (p, q) divided by their gcd. Throws Error unless p, q >= 1.
  PeriodicPair reduce_exponents(std::int64_t p, std::int64_t q);

  // (u, v) with u >= 0, v <= 0, p u + q v = 1 and u minimal. Throws Error if
  // p, q are not coprime positive integers.
  std::pair<std::int64_t, std::int64_t> bezout_pair(std::int64_t p,
                                                    std::int64_t q);

  // Raised when the hypotheses of bezout_root fail; the message names the
  // identity that does not hold.
  class PreconditionFailure : public Error {
   public:
    using Error::Error;
  };

  struct BezoutRoot {
    NormalForm                            root;
    std::pair<std::int64_t, std::int64_t> pair;
    std::pair<std::int64_t, std::int64_t> second_pair;
  };

  // rho^d = delta^r = z with rho, delta commuting. Returns q = rho^v delta^u
  // for d' u + r' v = 1 (d' = d / gcd, r' = r / gcd), after checking
  // q^lcm(d, r) = z, q^d' = delta, q^r' = rho and that the pair
  // (u + r', v - d') gives the same element.
  BezoutRoot bezout_root(GarsideStructure const& g,
                         NormalForm const&       rho,
                         NormalForm const&       delta,
                         std::int64_t            d,
                         std::int64_t            r,
                         NormalForm const&       z);

  // Divisors of zp_delta_power * length(Delta), increasing.
  std::vector<std::int64_t> candidate_root_orders(GarsideStructure const& g,
                                                  std::int64_t zp_delta_power);

  struct CentralizerSummary {
    std::size_t            base = 0;
    std::size_t            loop_generators = 0;
    std::size_t            relators = 0;
    SimplifiedPresentation simplified;
    bool                   cyclic = false;
    bool                   infinite_cyclic = false;
    // Collapse image of the surviving generator, oriented to have positive
    // length.
    std::optional<NormalForm> generator;
  };

  struct RootReport {
    std::int64_t d = 1;
    std::int64_t zp_delta_power = 1;
    PeriodicPair reduced;
    std::size_t  objects = 0;
    std::size_t  morphisms = 0;  // non-identity generating morphisms
    std::size_t  identities = 0;
    std::size_t  relations = 0;
    std::size_t  components = 0;
    bool         exists = false;
    bool         connected = false;

    std::optional<CentralizerSummary> centralizer;
  };

  // Builds C_p'^q' for (p', q') = reduce_exponents(d, zp_delta_power) and
  // reports whether d-th roots of Delta^zp_delta_power exist and how many
  // conjugacy classes they form. Throws Error if Delta^zp_delta_power is not
  // central.
  RootReport roots_report(GarsideStructure const& g,
                          std::int64_t            zp_delta_power,
                          std::int64_t            d,
                          bool                    centralizer = false,
                          std::size_t             base = 0);

  CentralizerSummary centralizer_summary(GarsideStructure const& g,
                                         DividedCategory const&  c,
                                         std::size_t             base);

}  // namespace garside

#endif  // GARSIDE_PERIODIC_HPP_
