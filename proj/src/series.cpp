#include "garside/series.hpp"

#include <string>

#include "garside/errors.hpp"
#include "garside/structure.hpp"

namespace garside {

  Presentation typeb_presentation(std::size_t n) {
    if (n == 0) {
      throw Error("type B presentations need n >= 1");
    }
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= n; ++i) {
      gens.push_back("b" + std::to_string(i));
    }
    std::vector<relation_type> rels;
    auto                       b = [](std::size_t i) {
      return static_cast<letter_type>(i - 1);
    };
    if (n >= 2) {
      rels.push_back({{b(1), b(2), b(1), b(2)}, {b(2), b(1), b(2), b(1)}});
    }
    for (std::size_t i = 2; i + 1 <= n; ++i) {
      rels.push_back({{b(i), b(i + 1), b(i)}, {b(i + 1), b(i), b(i + 1)}});
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 2; j <= n; ++j) {
        rels.push_back({{b(i), b(j)}, {b(j), b(i)}});
      }
    }
    word_type coxeter;
    for (std::size_t i = 1; i <= n; ++i) {
      coxeter.push_back(b(i));
    }
    return Presentation(std::move(gens), std::move(rels), power(coxeter, n));
  }

  std::int64_t winding(group_word const& w) {
    std::int64_t out = 0;
    for (auto x : w) {
      if (x == 1) {
        ++out;
      } else if (x == -1) {
        --out;
      }
    }
    return out;
  }

  bool is_member(group_word const& w, std::int64_t e) {
    if (e < 1) {
      throw Error("membership needs e >= 1");
    }
    return winding(w) % e == 0;
  }

  group_word epsilon_word(std::size_t n) {
    group_word out;
    for (auto i = static_cast<int>(n); i >= 1; --i) {
      out.push_back(i);
    }
    return out;
  }

  group_word z_word(std::int64_t e) {
    return group_word(static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? -1 : 1);
  }

  group_word t_word(std::int64_t i) {
    auto out = z_word(-i);
    out.push_back(2);
    auto back = z_word(i);
    out.insert(out.end(), back.begin(), back.end());
    return out;
  }

  EpsilonVerdict check_epsilon(std::size_t n) {
    auto const     p = typeb_presentation(n);
    auto const     g = build_garside(p);
    EpsilonVerdict out;
    out.n            = n;
    out.simple_count = g.size();
    group_word eps_n;
    for (std::size_t k = 0; k < n; ++k) {
      auto e = epsilon_word(n);
      eps_n.insert(eps_n.end(), e.begin(), e.end());
    }
    out.epsilon_power = normal_form(g, eps_n);
    out.equals_delta  = out.epsilon_power == delta_power(g, 1);
    out.delta_central = is_central(g, delta_power(g, 1));
    if (n == 2) {
      auto const& r   = p.relations().front();
      auto        lhs = to_group_word(r.first);
      auto        rhs = to_group_word(r.second);
      auto        del = to_group_word(p.delta());
      out.syntactic   = (lhs == del && rhs == eps_n) || (rhs == del && lhs == eps_n);
    }
    return out;
  }

}  // namespace garside
