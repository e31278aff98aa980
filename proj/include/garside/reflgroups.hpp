#ifndef GARSIDE_REFLGROUPS_HPP_
#define GARSIDE_REFLGROUPS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace garside {

  using integers = std::vector<std::int64_t>;

  // Parameters (de, e, n) of the imprimitive group G(de, e, n).
  struct SeriesParams {
    std::int64_t de = 1;
    std::int64_t e  = 1;
    std::int64_t n  = 1;

    auto operator<=>(SeriesParams const&) const = default;
  };

  struct GroupData {
    std::string name;
    // Shephard-Todd number for exceptional groups, 0 for the series.
    int                         exceptional = 0;
    std::optional<SeriesParams> series;
    integers                    degrees;    // sorted
    integers                    codegrees;  // sorted

    std::size_t rank() const noexcept {
      return degrees.size();
    }
  };

  // One record per line: "G<k>: degrees=<d,...> codegrees=<c,...>", with
  // '#' comments. Throws ParseError on malformed records and on records
  // contradicting the values for G12 and G13 used elsewhere.
  std::vector<GroupData> parse_exceptional_table(std::string const& text);
  std::vector<GroupData> read_exceptional_table(std::string const& path);

  // G(de, e, n). Throws Error unless de, e, n >= 1 and e | de. G(1, 1, n) is
  // the symmetric group acting on its rank n - 1 reflection representation.
  GroupData series_group(SeriesParams const& s);

  std::string series_name(SeriesParams const& s);

  // "G12" (looked up in `table`) or "G(de,e,n)". Throws ParseError on an
  // unknown or malformed name.
  GroupData group_data(std::string const&            name,
                       std::vector<GroupData> const& table);

  struct RegularityReport {
    std::int64_t d = 1;
    integers     a;  // degrees divisible by d
    integers     b;  // codegrees divisible by d
    bool         regular = false;
    // gcd of a and b, when regular.
    std::optional<std::int64_t> fundamental;
    // Regular e with the same a and b, when d is regular.
    integers                    r_class;
    // The unique divisibility-minimal element of r_class, if there is one.
    std::optional<std::int64_t> class_minimum;
  };

  RegularityReport regularity(GroupData const& gd, std::int64_t d);

  // Regular numbers (all of them divide the largest degree).
  integers regular_numbers(GroupData const& gd);

  // Fundamental regular numbers, increasing.
  integers fundamentals(GroupData const& gd);

  // Regular numbers grouped by (A(d), B(d)), ordered by least element.
  std::vector<integers> regular_classes(GroupData const& gd);

  // R_1 = divisors of the center order; for the fundamental regular numbers
  // d_1 < ... < d_k and i >= 2, R_i = {d : d | d_i and d does not divide
  // d_{i-1}}.
  std::vector<integers> divisibility_classes(GroupData const& gd);

  // Product of the degrees. Throws Error on overflow.
  std::int64_t group_order(GroupData const& gd);

  // gcd of the degrees.
  std::int64_t center_order(GroupData const& gd);

  struct PairCaps {
    std::int64_t max_de = 120;
    std::int64_t max_n  = 10;
  };

  struct GroupPair {
    GroupData first;
    GroupData second;
  };

  // Series groups G(de, e, n) with de <= max_de and n <= max_n, leaving out
  // the rank one groups and the reducible G(2, 2, 2).
  std::vector<GroupData> series_groups(PairCaps const& caps);

  // Unordered pairs of distinct groups (exceptional table plus the series
  // within caps) with equal degrees and equal codegrees. Within a pair the
  // exceptional group, or else the smaller parameter triple, comes first;
  // pairs are sorted by their first then second member.
  std::vector<GroupPair> isodiscriminantal_pairs(std::vector<GroupData> const& table,
                                                 PairCaps const& caps = {});

}  // namespace garside

#endif  // GARSIDE_REFLGROUPS_HPP_
