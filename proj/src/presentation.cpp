#include "garside/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "garside/errors.hpp"

namespace garside {

  namespace {
    bool is_name(std::string_view s) {
      if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
        return false;
      }
      for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          return false;
        }
      }
      return true;
    }

    std::string_view trim(std::string_view s) {
      auto const ws    = " \t\r\n";
      auto       first = s.find_first_not_of(ws);
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(ws);
      return s.substr(first, last - first + 1);
    }

    std::vector<std::string_view> tokens(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size()
               && !std::isspace(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace

  group_word free_reduce(group_word const& w) {
    group_word out;
    out.reserve(w.size());
    for (int x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  group_word cyclic_reduce(group_word const& w) {
    group_word  r     = free_reduce(w);
    std::size_t first = 0;
    std::size_t last  = r.size();
    while (last - first >= 2 && r[first] == -r[last - 1]) {
      ++first;
      --last;
    }
    return group_word(r.begin() + first, r.begin() + last);
  }

  Presentation::Presentation(std::vector<std::string>   generators,
                             std::vector<relation_type> relations,
                             word_type                  delta)
      : _generators(std::move(generators)),
        _relations(std::move(relations)),
        _delta(std::move(delta)) {
    if (_generators.empty()) {
      throw ParseError("presentation has no generators");
    }
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      auto const& g = _generators[i];
      if (!is_name(g)) {
        throw ParseError("invalid generator name \"" + g + "\"");
      }
      if (!_index.emplace(g, static_cast<letter_type>(i)).second) {
        throw ParseError("duplicate generator \"" + g + "\"");
      }
      _compact = _compact && g.size() == 1;
    }
    auto check = [this](word_type const& w, std::string const& what) {
      for (auto x : w) {
        if (x >= _generators.size()) {
          throw ParseError(what + " uses undeclared generator index "
                           + std::to_string(x));
        }
      }
    };
    for (std::size_t i = 0; i < _relations.size(); ++i) {
      check(_relations[i].first, "relation " + std::to_string(i));
      check(_relations[i].second, "relation " + std::to_string(i));
    }
    check(_delta, "delta");
  }

  letter_type Presentation::letter(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      throw ParseError("undeclared generator \"" + std::string(name) + "\"");
    }
    return it->second;
  }

  word_type Presentation::parse_word(std::string_view text) const {
    word_type out;
    for (auto tok : tokens(text)) {
      if (!_compact || _index.count(std::string(tok)) != 0) {
        out.push_back(letter(tok));
        continue;
      }
      // With one-character names "stus" is accepted as s t u s.
      for (char c : tok) {
        out.push_back(letter(std::string_view(&c, 1)));
      }
    }
    return out;
  }

  group_word Presentation::parse_group_word(std::string_view text) const {
    group_word out;
    for (auto tok : tokens(text)) {
      bool inv = false;
      if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
        inv = true;
        tok.remove_suffix(3);
      }
      word_type w = parse_word(tok);
      if (inv) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          out.push_back(inverse_letter(*it));
        }
      } else {
        for (auto x : w) {
          out.push_back(positive_letter(x));
        }
      }
    }
    return out;
  }

  std::string Presentation::to_string(word_type const& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0 && !_compact) {
        out += ' ';
      }
      out += _generators.at(w[i]);
    }
    return out;
  }

  std::string Presentation::to_string(group_word const& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += _generators.at(generator_of(w[i]));
      if (w[i] < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  Presentation parse_presentation(std::string_view text) {
    std::vector<std::string>                  gens;
    std::vector<std::pair<std::string, std::string>> raw_rels;
    std::optional<std::string>                delta;
    bool                                      have_gens = false;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = trim(text.substr(pos, end - pos));
      pos       = end + 1;
      ++line_no;
      auto where = "line " + std::to_string(line_no) + ": ";
      if (line.empty() || line[0] == '#') {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(where + "expected `key: value`");
      }
      auto key   = trim(line.substr(0, colon));
      auto value = trim(line.substr(colon + 1));
      if (key == "gens") {
        if (have_gens) {
          throw ParseError(where + "duplicate `gens:` line");
        }
        have_gens = true;
        for (auto tok : tokens(value)) {
          if (!is_name(tok)) {
            throw ParseError(where + "invalid generator name \""
                             + std::string(tok) + "\"");
          }
          gens.emplace_back(tok);
        }
        if (gens.empty()) {
          throw ParseError(where + "`gens:` declares no generators");
        }
      } else if (key == "rel") {
        auto eq = value.find('=');
        if (eq == std::string_view::npos
            || value.find('=', eq + 1) != std::string_view::npos) {
          throw ParseError(where + "relation must have the form `u = v`");
        }
        raw_rels.emplace_back(std::string(trim(value.substr(0, eq))),
                              std::string(trim(value.substr(eq + 1))));
      } else if (key == "delta") {
        if (delta) {
          throw ParseError(where + "duplicate `delta:` line");
        }
        delta = std::string(value);
      } else {
        throw ParseError(where + "unknown key \"" + std::string(key) + "\"");
      }
    }
    if (!have_gens) {
      throw ParseError("missing `gens:` line");
    }
    if (!delta) {
      throw ParseError("missing `delta:` line");
    }
    // Words are resolved against a relation-free presentation first, so that
    // undeclared names are reported before anything else.
    Presentation               names(gens, {}, {});
    std::vector<relation_type> rels;
    for (auto const& [lhs, rhs] : raw_rels) {
      rels.emplace_back(names.parse_word(lhs), names.parse_word(rhs));
    }
    auto d = names.parse_word(*delta);
    return Presentation(std::move(gens), std::move(rels), std::move(d));
  }

  Presentation read_presentation(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read presentation file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }

  std::optional<HomogeneityViolation>
  validate_homogeneous(Presentation const& p) {
    auto const& rels = p.relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (rels[i].first.size() != rels[i].second.size()) {
        return HomogeneityViolation{
            i, rels[i].first.size(), rels[i].second.size()};
      }
    }
    return std::nullopt;
  }

}  // namespace garside
