#include "garside/periodic.hpp"

#include <numeric>
#include <string>

namespace garside {

  bool PeriodicPair::reduced() const {
    return std::gcd(p, q) == 1;
  }

  PeriodicPair reduce_exponents(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) {
      throw Error("exponents must be positive, got (" + std::to_string(p)
                  + ", " + std::to_string(q) + ")");
    }
    auto g = std::gcd(p, q);
    return {p / g, q / g};
  }

  std::pair<std::int64_t, std::int64_t> bezout_pair(std::int64_t p,
                                                    std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
      throw Error("bezout_pair needs coprime positive integers, got ("
                  + std::to_string(p) + ", " + std::to_string(q) + ")");
    }
    // u = p^-1 mod q, with u = 1 when q = 1.
    for (std::int64_t u = 1; u <= q; ++u) {
      if ((p * u - 1) % q == 0) {
        return {u, (1 - p * u) / q};
      }
    }
    throw Error("internal error: no Bezout pair found");
  }

  BezoutRoot bezout_root(GarsideStructure const& g,
                         NormalForm const&       rho,
                         NormalForm const&       delta,
                         std::int64_t            d,
                         std::int64_t            r,
                         NormalForm const&       z) {
    if (d < 1 || r < 1) {
      throw Error("bezout_root needs positive orders");
    }
    auto witness = [&](NormalForm const& lhs, NormalForm const& rhs,
                       std::string const& what) {
      throw PreconditionFailure(what + ": " + to_string(g, lhs)
                                + " != " + to_string(g, rhs));
    };
    if (auto x = power(g, rho, d); x != z) {
      witness(x, z, "rho^" + std::to_string(d) + " != z");
    }
    if (auto x = power(g, delta, r); x != z) {
      witness(x, z, "delta^" + std::to_string(r) + " != z");
    }
    if (auto x = multiply(g, rho, delta), y = multiply(g, delta, rho);
        x != y) {
      witness(x, y, "rho and delta do not commute");
    }
    auto const k  = std::gcd(d, r);
    auto const dd = d / k;
    auto const rr = r / k;
    auto [u, v]   = bezout_pair(dd, rr);
    auto at       = [&](std::int64_t uu, std::int64_t vv) {
      return multiply(g, power(g, rho, vv), power(g, delta, uu));
    };
    BezoutRoot out{at(u, v), {u, v}, {u + rr, v - dd}};
    auto const second = at(out.second_pair.first, out.second_pair.second);
    if (second != out.root) {
      throw Error("Bezout root depends on the pair: "
                  + to_string(g, out.root) + " != " + to_string(g, second));
    }
    if (power(g, out.root, std::lcm(d, r)) != z
        || power(g, out.root, dd) != delta || power(g, out.root, rr) != rho) {
      throw Error("Bezout root " + to_string(g, out.root)
                  + " fails its defining identities");
    }
    return out;
  }

  std::vector<std::int64_t> candidate_root_orders(GarsideStructure const& g,
                                                  std::int64_t zp_delta_power) {
    auto const n = zp_delta_power * static_cast<std::int64_t>(g.delta_length());
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= n; ++k) {
      if (n % k == 0) {
        out.push_back(k);
      }
    }
    return out;
  }

  CentralizerSummary centralizer_summary(GarsideStructure const& g,
                                         DividedCategory const&  c,
                                         std::size_t             base) {
    CentralizerSummary out;
    out.base             = base;
    auto const v         = vertex_group(g, c, base);
    out.loop_generators  = v.generators.size();
    out.relators         = v.relators.size();
    out.simplified       = simplify_presentation(v);
    out.cyclic           = out.simplified.conclusive();
    out.infinite_cyclic  = out.simplified.is_infinite_cyclic();
    if (out.simplified.generators.size() == 1) {
      auto x = v.collapse_images[out.simplified.generators.front()];
      if (length(g, x) < 0) {
        x = invert(g, x);
      }
      out.generator = x;
    }
    return out;
  }

  RootReport roots_report(GarsideStructure const& g,
                          std::int64_t            zp_delta_power,
                          std::int64_t            d,
                          bool                    centralizer,
                          std::size_t             base) {
    if (!is_central(g, delta_power(g, zp_delta_power))) {
      throw Error("Delta^" + std::to_string(zp_delta_power)
                  + " is not central");
    }
    RootReport out;
    out.d              = d;
    out.zp_delta_power = zp_delta_power;
    out.reduced        = reduce_exponents(d, zp_delta_power);
    auto const c       = build_category(g,
                                  static_cast<std::size_t>(out.reduced.p),
                                  static_cast<std::size_t>(out.reduced.q));
    out.objects = c.objects.size();
    for (bool id : c.identity) {
      (id ? out.identities : out.morphisms)++;
    }
    out.relations  = c.relations.size();
    out.components = components(c).size();
    out.exists     = out.components >= 1;
    out.connected  = out.components == 1;
    if (centralizer && out.exists) {
      if (base >= c.objects.size()) {
        throw Error("base object out of range");
      }
      out.centralizer = centralizer_summary(g, c, base);
    }
    return out;
  }

}  // namespace garside
