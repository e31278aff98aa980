#include "garside/normal_form.hpp"

#include <utility>

namespace garside {

  namespace {
    // Right-multiplies the left-weighted sequence `seq` by the simple t and
    // restores left-weightedness by sweeping leftwards.
    void push_simple(GarsideStructure const& g,
                     std::vector<SimpleId>&  seq,
                     SimpleId                t) {
      if (t == g.identity()) {
        return;
      }
      seq.push_back(t);
      for (std::size_t i = seq.size() - 1; i > 0; --i) {
        auto [c, d] = g.left_weighted(seq[i - 1], seq[i]);
        if (c == seq[i - 1]) {
          break;
        }
        seq[i - 1] = c;
        seq[i]     = d;
      }
      while (!seq.empty() && seq.back() == g.identity()) {
        seq.pop_back();
      }
    }

    // Moves leading Delta factors into the exponent.
    NormalForm finish(GarsideStructure const& g,
                      std::int64_t            k,
                      std::vector<SimpleId>   seq) {
      std::size_t lead = 0;
      while (lead < seq.size() && seq[lead] == g.delta()) {
        ++lead;
      }
      NormalForm out;
      out.delta_power = k + static_cast<std::int64_t>(lead);
      out.factors.assign(seq.begin() + lead, seq.end());
      return out;
    }

    // x^-1 for a simple x: x^-1 = complement(x) Delta^-1
    //                            = Delta^-1 phi^-1(complement(x)).
    NormalForm simple_inverse(GarsideStructure const& g, SimpleId x) {
      std::vector<SimpleId> seq;
      push_simple(g, seq, g.phi(g.complement(x), -1));
      return finish(g, -1, std::move(seq));
    }
  }  // namespace

  NormalForm delta_power(GarsideStructure const&, std::int64_t k) {
    return NormalForm{k, {}};
  }

  NormalForm simple_normal_form(GarsideStructure const& g, SimpleId a) {
    std::vector<SimpleId> seq;
    push_simple(g, seq, a);
    return finish(g, 0, std::move(seq));
  }

  NormalForm product_normal_form(GarsideStructure const&      g,
                                 std::vector<SimpleId> const& simples) {
    std::vector<SimpleId> seq;
    for (auto a : simples) {
      push_simple(g, seq, a);
    }
    return finish(g, 0, std::move(seq));
  }

  NormalForm normal_form(GarsideStructure const& g, word_type const& w) {
    std::vector<SimpleId> seq;
    for (auto x : w) {
      push_simple(g, seq, g.atom(x));
    }
    return finish(g, 0, std::move(seq));
  }

  NormalForm normal_form(GarsideStructure const& g, group_word const& w) {
    NormalForm out;
    for (int x : w) {
      auto a = g.atom(generator_of(x));
      out    = multiply(g, out, x > 0 ? simple_normal_form(g, a)
                                      : simple_inverse(g, a));
    }
    return out;
  }

  NormalForm multiply(GarsideStructure const& g,
                      NormalForm const&       x,
                      NormalForm const&       y) {
    // Delta^k P Delta^m Q = Delta^(k+m) phi^m(P) Q.
    std::vector<SimpleId> seq;
    seq.reserve(x.factors.size() + y.factors.size());
    for (auto a : x.factors) {
      seq.push_back(g.phi(a, y.delta_power));
    }
    for (auto b : y.factors) {
      push_simple(g, seq, b);
    }
    return finish(g, x.delta_power + y.delta_power, std::move(seq));
  }

  NormalForm invert(GarsideStructure const& g, NormalForm const& x) {
    NormalForm out = delta_power(g, -x.delta_power);
    for (auto a : x.factors) {
      out = multiply(g, simple_inverse(g, a), out);
    }
    return out;
  }

  NormalForm power(GarsideStructure const& g,
                   NormalForm const&       x,
                   std::int64_t            k) {
    NormalForm base = k < 0 ? invert(g, x) : x;
    auto       e    = k < 0 ? -k : k;
    NormalForm out;
    while (e > 0) {
      if (e & 1) {
        out = multiply(g, out, base);
      }
      e >>= 1;
      if (e > 0) {
        base = multiply(g, base, base);
      }
    }
    return out;
  }

  bool is_central(GarsideStructure const& g, NormalForm const& x) {
    for (auto a : g.atoms()) {
      auto an = simple_normal_form(g, a);
      if (multiply(g, x, an) != multiply(g, an, x)) {
        return false;
      }
    }
    return true;
  }

  NormalForm phi_apply(GarsideStructure const& g,
                       NormalForm const&       x,
                       std::int64_t            k) {
    NormalForm out = x;
    for (auto& a : out.factors) {
      a = g.phi(a, k);
    }
    return out;
  }

  std::int64_t length(GarsideStructure const& g, NormalForm const& x) {
    auto len = x.delta_power * static_cast<std::int64_t>(g.delta_length());
    for (auto a : x.factors) {
      len += static_cast<std::int64_t>(g.length(a));
    }
    return len;
  }

  group_word to_word(GarsideStructure const& g, NormalForm const& x) {
    group_word  out;
    auto const& dw = g.word(g.delta());
    if (x.delta_power < 0) {
      auto inv = inverse(to_group_word(dw));
      for (std::int64_t i = 0; i < -x.delta_power; ++i) {
        out.insert(out.end(), inv.begin(), inv.end());
      }
    } else {
      for (std::int64_t i = 0; i < x.delta_power; ++i) {
        for (auto l : dw) {
          out.push_back(positive_letter(l));
        }
      }
    }
    for (auto a : x.factors) {
      for (auto l : g.word(a)) {
        out.push_back(positive_letter(l));
      }
    }
    return out;
  }

  std::string to_string(GarsideStructure const& g, NormalForm const& x) {
    std::string out;
    if (x.delta_power != 0) {
      out = "Delta";
      if (x.delta_power != 1) {
        out += "^" + std::to_string(x.delta_power);
      }
    }
    for (auto a : x.factors) {
      if (!out.empty()) {
        out += ".";
      }
      out += g.to_string(a);
    }
    return out.empty() ? "1" : out;
  }

}  // namespace garside
