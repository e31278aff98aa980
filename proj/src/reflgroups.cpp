#include "garside/reflgroups.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <tuple>

#include "garside/errors.hpp"

namespace garside {

  namespace {
    integers parse_list(std::string const& text, std::size_t line) {
      integers           out;
      std::istringstream in(text);
      std::string        item;
      while (std::getline(in, item, ',')) {
        try {
          std::size_t used = 0;
          out.push_back(std::stoll(item, &used));
          if (used != item.size()) {
            throw std::invalid_argument(item);
          }
        } catch (std::exception const&) {
          throw ParseError("line " + std::to_string(line)
                           + ": bad integer \"" + item + "\"");
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    integers filter(integers const& xs, std::int64_t d) {
      integers out;
      std::copy_if(xs.begin(), xs.end(), std::back_inserter(out),
                   [d](auto x) { return x % d == 0; });
      return out;
    }

    std::int64_t gcd_of(integers const& xs) {
      std::int64_t g = 0;
      for (auto x : xs) {
        g = std::gcd(g, x);
      }
      return g;
    }

    std::int64_t max_degree(GroupData const& gd) {
      return gd.degrees.empty() ? 1 : gd.degrees.back();
    }

    auto sort_key(GroupData const& gd) {
      auto s = gd.series.value_or(SeriesParams{0, 0, 0});
      return std::make_tuple(gd.exceptional == 0, gd.exceptional, s);
    }
  }  // namespace

  std::vector<GroupData> parse_exceptional_table(std::string const& text) {
    static std::regex const record(
        R"(^\s*G(\d+)\s*:\s*degrees\s*=\s*([0-9,]+)\s+codegrees\s*=\s*([0-9,]+)\s*$)");
    std::vector<GroupData> out;
    std::istringstream     in(text);
    std::string            raw;
    std::size_t            line = 0;
    while (std::getline(in, raw)) {
      ++line;
      if (!raw.empty() && raw.back() == '\r') {
        raw.pop_back();
      }
      auto hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.erase(hash);
      }
      if (raw.find_first_not_of(" \t") == std::string::npos) {
        continue;
      }
      std::smatch m;
      if (!std::regex_match(raw, m, record)) {
        throw ParseError("line " + std::to_string(line)
                         + ": expected \"G<k>: degrees=... codegrees=...\"");
      }
      GroupData gd;
      gd.name        = "G" + m[1].str();
      gd.exceptional = std::stoi(m[1].str());
      gd.degrees     = parse_list(m[2].str(), line);
      gd.codegrees   = parse_list(m[3].str(), line);
      if (gd.degrees.size() != gd.codegrees.size()) {
        throw ParseError("line " + std::to_string(line) + ": " + gd.name
                         + " has different numbers of degrees and codegrees");
      }
      for (auto const& other : out) {
        if (other.exceptional == gd.exceptional) {
          throw ParseError("line " + std::to_string(line) + ": duplicate "
                           + gd.name);
        }
      }
      out.push_back(std::move(gd));
    }
    // Values used by the rank two computations; a mismatch means the table
    // was mistyped.
    std::map<std::string, std::pair<integers, integers>> const known
        = {{"G12", {{6, 8}, {0, 10}}}, {"G13", {{8, 12}, {0, 16}}}};
    for (auto const& gd : out) {
      auto it = known.find(gd.name);
      if (it != known.end()
          && (gd.degrees != it->second.first
              || gd.codegrees != it->second.second)) {
        throw ParseError(gd.name + " does not have the expected degrees and "
                         "codegrees");
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.exceptional < y.exceptional;
    });
    return out;
  }

  std::vector<GroupData> read_exceptional_table(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_exceptional_table(text.str());
  }

  std::string series_name(SeriesParams const& s) {
    return "G(" + std::to_string(s.de) + "," + std::to_string(s.e) + ","
           + std::to_string(s.n) + ")";
  }

  GroupData series_group(SeriesParams const& s) {
    if (s.de < 1 || s.e < 1 || s.n < 1 || s.de % s.e != 0) {
      throw Error("invalid series parameters " + series_name(s));
    }
    GroupData gd;
    gd.name   = series_name(s);
    gd.series = s;
    auto const d = s.de / s.e;
    if (s.de == 1) {
      for (std::int64_t k = 2; k <= s.n; ++k) {
        gd.degrees.push_back(k);
        gd.codegrees.push_back(k - 2);
      }
    } else {
      for (std::int64_t k = 1; k < s.n; ++k) {
        gd.degrees.push_back(k * s.de);
      }
      gd.degrees.push_back(d * s.n);
      gd.codegrees.push_back(0);
      if (d > 1) {
        for (std::int64_t k = 1; k < s.n; ++k) {
          gd.codegrees.push_back(k * s.de);
        }
      } else if (s.n > 1) {
        for (std::int64_t k = 1; k + 1 < s.n; ++k) {
          gd.codegrees.push_back(k * s.e);
        }
        gd.codegrees.push_back((s.n - 1) * s.e - s.n);
      }
    }
    std::sort(gd.degrees.begin(), gd.degrees.end());
    std::sort(gd.codegrees.begin(), gd.codegrees.end());
    return gd;
  }

  GroupData group_data(std::string const&            name,
                       std::vector<GroupData> const& table) {
    static std::regex const exceptional(R"(G(\d+))");
    static std::regex const series(R"(G\((\d+),(\d+),(\d+)\))");
    std::smatch             m;
    if (std::regex_match(name, m, exceptional)) {
      for (auto const& gd : table) {
        if (gd.name == name) {
          return gd;
        }
      }
      throw ParseError("unknown exceptional group " + name);
    }
    if (std::regex_match(name, m, series)) {
      try {
        return series_group(
            {std::stoll(m[1].str()), std::stoll(m[2].str()), std::stoll(m[3].str())});
      } catch (std::out_of_range const&) {
        throw ParseError("series parameters out of range in " + name);
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }
    throw ParseError("expected a group name like G12 or G(12,12,2), got \""
                     + name + "\"");
  }

  RegularityReport regularity(GroupData const& gd, std::int64_t d) {
    if (d < 1) {
      throw Error("regularity needs d >= 1");
    }
    RegularityReport out;
    out.d       = d;
    out.a       = filter(gd.degrees, d);
    out.b       = filter(gd.codegrees, d);
    out.regular = out.a.size() == out.b.size();
    if (!out.regular) {
      return out;
    }
    integers both = out.a;
    both.insert(both.end(), out.b.begin(), out.b.end());
    out.fundamental = gcd_of(both);
    for (std::int64_t e = 1; e <= max_degree(gd); ++e) {
      auto a = filter(gd.degrees, e);
      auto b = filter(gd.codegrees, e);
      if (a.size() == b.size() && a == out.a && b == out.b) {
        out.r_class.push_back(e);
      }
    }
    integers minimal;
    for (auto x : out.r_class) {
      if (std::none_of(out.r_class.begin(), out.r_class.end(),
                       [x](auto y) { return y != x && x % y == 0; })) {
        minimal.push_back(x);
      }
    }
    if (minimal.size() == 1) {
      out.class_minimum = minimal.front();
    }
    return out;
  }

  integers regular_numbers(GroupData const& gd) {
    integers out;
    for (std::int64_t d = 1; d <= max_degree(gd); ++d) {
      if (regularity(gd, d).regular) {
        out.push_back(d);
      }
    }
    return out;
  }

  integers fundamentals(GroupData const& gd) {
    integers out;
    for (auto d : regular_numbers(gd)) {
      out.push_back(*regularity(gd, d).fundamental);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<integers> regular_classes(GroupData const& gd) {
    std::vector<integers> out;
    for (auto d : regular_numbers(gd)) {
      auto cls = regularity(gd, d).r_class;
      if (std::find(out.begin(), out.end(), cls) == out.end()) {
        out.push_back(std::move(cls));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<integers> divisibility_classes(GroupData const& gd) {
    std::vector<integers> out;
    auto const            z = center_order(gd);
    integers              first;
    for (std::int64_t d = 1; d <= z; ++d) {
      if (z % d == 0) {
        first.push_back(d);
      }
    }
    out.push_back(std::move(first));
    auto const f = fundamentals(gd);
    for (std::size_t i = 1; i < f.size(); ++i) {
      integers cls;
      for (std::int64_t d = 1; d <= f[i]; ++d) {
        if (f[i] % d == 0 && f[i - 1] % d != 0) {
          cls.push_back(d);
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  std::int64_t group_order(GroupData const& gd) {
    std::int64_t out = 1;
    for (auto x : gd.degrees) {
      if (__builtin_mul_overflow(out, x, &out)) {
        throw Error("order of " + gd.name + " overflows 64 bits");
      }
    }
    return out;
  }

  std::int64_t center_order(GroupData const& gd) {
    return gcd_of(gd.degrees);
  }

  std::vector<GroupData> series_groups(PairCaps const& caps) {
    std::vector<GroupData> out;
    for (std::int64_t de = 1; de <= caps.max_de; ++de) {
      for (std::int64_t e = 1; e <= de; ++e) {
        if (de % e != 0) {
          continue;
        }
        for (std::int64_t n = 2; n <= caps.max_n; ++n) {
          SeriesParams s{de, e, n};
          if ((de == 1 && n == 2) || s == SeriesParams{2, 2, 2}) {
            continue;
          }
          out.push_back(series_group(s));
        }
      }
    }
    return out;
  }

  std::vector<GroupPair> isodiscriminantal_pairs(std::vector<GroupData> const& table,
                                                 PairCaps const& caps) {
    if (caps.max_de < 1 || caps.max_n < 1) {
      throw Error("pair search caps must be positive");
    }
    std::vector<GroupData> all = table;
    auto                   series = series_groups(caps);
    all.insert(all.end(), series.begin(), series.end());
    std::map<std::pair<integers, integers>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < all.size(); ++i) {
      buckets[{all[i].degrees, all[i].codegrees}].push_back(i);
    }
    std::vector<GroupPair> out;
    for (auto const& [key, members] : buckets) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          auto x = all[members[i]];
          auto y = all[members[j]];
          if (sort_key(y) < sort_key(x)) {
            std::swap(x, y);
          }
          out.push_back({std::move(x), std::move(y)});
        }
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return std::make_pair(sort_key(x.first), sort_key(x.second))
             < std::make_pair(sort_key(y.first), sort_key(y.second));
    });
    return out;
  }

}  // namespace garside
