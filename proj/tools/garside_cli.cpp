// Command-line front end: every subcommand prints one JSON document on
// stdout. Exit status 0 on success, 1 when a check fails, 2 on bad input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "garside/divided.hpp"
#include "garside/errors.hpp"
#include "garside/normal_form.hpp"
#include "garside/periodic.hpp"
#include "garside/presentation.hpp"
#include "garside/reflgroups.hpp"
#include "garside/scenario.hpp"
#include "garside/series.hpp"
#include "garside/structure.hpp"

using json = nlohmann::ordered_json;
using namespace garside;

namespace {

  json document(std::string const& command) {
    return json{{"schema", 1}, {"command", command}};
  }

  void emit(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  json nf_json(GarsideStructure const& g, NormalForm const& x) {
    json factors = json::array();
    for (auto f : x.factors) {
      factors.push_back(g.to_string(f));
    }
    return {{"delta_power", x.delta_power},
            {"factors", factors},
            {"normal_form", to_string(g, x)}};
  }

  json tuple_json(GarsideStructure const& g, DividedTuple const& t) {
    json out = json::array();
    for (auto a : t) {
      out.push_back(g.to_string(a));
    }
    return out;
  }

  json integers_json(integers const& xs) {
    return json(xs);
  }

  json axioms_json(AxiomReport const& r) {
    return {{"axioms", {{"balanced", r.balanced}, {"lattice", r.lattice}, {"phi", r.phi}}},
            {"simple_count", r.simple_count},
            {"phi_order", r.phi_order},
            {"witnesses", r.witnesses}};
  }

  json regularity_json(RegularityReport const& r) {
    json out = {{"d", r.d},
                {"A", integers_json(r.a)},
                {"B", integers_json(r.b)},
                {"regular", r.regular}};
    out["fundamental"]   = r.fundamental ? json(*r.fundamental) : json(nullptr);
    out["r_class"]       = integers_json(r.r_class);
    out["class_minimum"] = r.class_minimum ? json(*r.class_minimum) : json(nullptr);
    return out;
  }

  json category_json(GarsideStructure const& g, DividedCategory const& c) {
    json out = {{"p", c.p}, {"q", c.q}};
    json objects = json::array();
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
      objects.push_back({{"id", i},
                         {"tuple", tuple_json(g, c.objects[i])},
                         {"label", object_label(g, c, i)}});
    }
    json morphisms = json::array();
    for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
      auto const& f = c.morphisms[i];
      morphisms.push_back({{"id", i},
                           {"tuple", tuple_json(g, f.tuple)},
                           {"label", morphism_label(g, c, i)},
                           {"source", f.source},
                           {"target", f.target},
                           {"identity", static_cast<bool>(c.identity[i])}});
    }
    json relations = json::array();
    for (auto const& r : c.relations) {
      relations.push_back({r.first, r.second, r.composite});
    }
    out["objects"]    = objects;
    out["morphisms"]  = morphisms;
    out["relations"]  = relations;
    out["components"] = components(c);

    auto const rp = reduced_presentation(c);
    json       gens = json::array();
    for (auto e : rp.generators) {
      gens.push_back(morphism_label(g, c, e));
    }
    json rels = json::array();
    for (auto const& [lhs, rhs] : rp.relations) {
      rels.push_back(path_label(g, c, lhs) + "=" + path_label(g, c, rhs));
    }
    out["presentation"] = {{"generators", gens}, {"relations", rels}};
    return out;
  }

  json root_json(GarsideStructure const& g, RootReport const& r) {
    json out = {{"d", r.d},
                {"zp_delta_power", r.zp_delta_power},
                {"reduced", {r.reduced.p, r.reduced.q}},
                {"objects", r.objects},
                {"morphisms", r.morphisms},
                {"identities", r.identities},
                {"relations", r.relations},
                {"components", r.components},
                {"exists", r.exists},
                {"connected", r.connected}};
    if (r.centralizer) {
      auto const& s = *r.centralizer;
      out["centralizer"] = {
          {"base", s.base},
          {"loop_generators", s.loop_generators},
          {"relators", s.relators},
          {"simplified_generators", s.simplified.generators.size()},
          {"simplified_relators", s.simplified.relators.size()},
          {"tietze_passes", s.simplified.passes},
          {"cyclic", s.cyclic},
          {"infinite_cyclic", s.infinite_cyclic},
          {"generator", s.generator ? nf_json(g, *s.generator) : json(nullptr)}};
    }
    return out;
  }

  json group_json(GroupData const& gd) {
    return {{"name", gd.name},
            {"rank", gd.rank()},
            {"degrees", integers_json(gd.degrees)},
            {"codegrees", integers_json(gd.codegrees)}};
  }

  json report_json(VerificationReport const& r, bool timings) {
    json out    = document(r.scenario);
    out["scenario"] = r.scenario;
    out["pass"]     = r.pass();
    json checks = json::array();
    json times  = json::object();
    for (auto const& c : r.checks) {
      checks.push_back({{"id", c.id},
                        {"description", c.description},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
      times[c.id] = c.elapsed_ms;
    }
    out["checks"] = checks;
    if (timings) {
      out["timings_ms"] = times;
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside structures, divided categories and regular numbers"};
  app.require_subcommand(1);
  std::size_t budget = 0;
  app.add_option("--budget", budget,
                 "words per length stratum for congruence enumeration");

  std::string file, word, group, table_path;

  auto* verify = app.add_subcommand("verify", "check the Garside axioms");
  verify->add_option("file", file, "presentation (.gar)")->required();

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("file", file, "presentation (.gar)")->required();
  nf->add_option("word", word, "word, empty for the identity; a ^-1 suffix inverts a letter");

  std::size_t p = 1, q = 0;
  bool        dot = false;
  auto* divided   = app.add_subcommand("divided", "divided category C_p^q");
  divided->add_option("file", file, "presentation (.gar)")->required();
  divided->add_option("-p", p, "objects are p-tuples")->required()->check(CLI::PositiveNumber);
  divided->add_option("-q", q, "shift exponent")->required()->check(CLI::NonNegativeNumber);
  divided->add_flag("--dot", dot, "print a Graphviz graph instead of JSON");

  std::int64_t zp = 1, d = 1;
  std::size_t  base = 0;
  bool         centralizer = false;
  auto*        roots = app.add_subcommand("roots", "d-th roots of Delta^zp");
  roots->add_option("file", file, "presentation (.gar)")->required();
  roots->add_option("--zp", zp, "z_P as a power of Delta")->required()->check(CLI::PositiveNumber);
  roots->add_option("-d", d, "root order")->required()->check(CLI::PositiveNumber);
  roots->add_flag("--centralizer", centralizer, "simplify the vertex group");
  roots->add_option("--base", base, "base object of the vertex group");

  std::optional<std::int64_t> reg_d;
  auto* regular = app.add_subcommand("regular", "regular numbers of a reflection group");
  regular->add_option("group", group, "G<k> or G(de,e,n)")->required();
  regular->add_option("-d", reg_d, "report on a single d")->check(CLI::PositiveNumber);
  regular->add_option("--table", table_path, "exceptional group table");

  PairCaps caps;
  auto*    pairs = app.add_subcommand("pairs", "groups with equal degrees and codegrees");
  pairs->add_option("--max-de", caps.max_de, "largest de searched")->check(CLI::PositiveNumber);
  pairs->add_option("--max-n", caps.max_n, "largest n searched")->check(CLI::PositiveNumber);
  pairs->add_option("--table", table_path, "exceptional group table");

  std::size_t  n = 2;
  bool         check_eps = false;
  std::string  wd_word, member_word;
  std::int64_t e = 1;
  auto*        typeb = app.add_subcommand("typeb", "type B braid words");
  typeb->add_option("-n", n, "rank")->required()->check(CLI::PositiveNumber);
  typeb->add_flag("--check-epsilon", check_eps, "verify epsilon^n = Delta");
  typeb->add_option("--wd", wd_word, "winding number of a word");
  typeb->add_option("--member", member_word, "membership of a word in B(de,e,n)");
  typeb->add_option("-e", e, "e for --member")->check(CLI::PositiveNumber);

  std::string data_dir = data_directory();
  bool        timings  = false;
  for (auto const& name : scenario_names()) {
    auto* s = app.add_subcommand(name, "bundled scenario " + name);
    s->add_option("--data-dir", data_dir, "directory with the bundled data");
    s->add_flag("--timings", timings, "add per-check timings to the report");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }
  if (budget != 0) {
    setenv("GARSIDE_ENUM_BUDGET", std::to_string(budget).c_str(), 1);
  }
  if (table_path.empty()) {
    table_path = data_directory() + "/exceptional.txt";
  }

  try {
    if (verify->parsed()) {
      auto r   = verify_garside(read_presentation(file));
      json out = document("verify");
      out["file"] = file;
      out.update(axioms_json(r.axioms));
      emit(out);
      return r.axioms.ok() ? 0 : 1;
    }
    if (nf->parsed()) {
      auto pr  = read_presentation(file);
      auto g   = build_garside(pr);
      json out = document("nf");
      out["word"] = word;
      out.update(nf_json(g, normal_form(g, pr.parse_group_word(word))));
      emit(out);
      return 0;
    }
    if (divided->parsed()) {
      auto g = build_garside(read_presentation(file));
      auto c = build_category(g, p, q);
      if (dot) {
        std::cout << to_dot(g, c);
      } else {
        json out = document("divided");
        out.update(category_json(g, c));
        emit(out);
      }
      return 0;
    }
    if (roots->parsed()) {
      auto g   = build_garside(read_presentation(file));
      json out = document("roots");
      out.update(root_json(g, roots_report(g, zp, d, centralizer, base)));
      emit(out);
      return 0;
    }
    if (regular->parsed()) {
      auto gd  = group_data(group, read_exceptional_table(table_path));
      json out = document("regular");
      out.update(group_json(gd));
      if (reg_d) {
        out["regularity"] = regularity_json(regularity(gd, *reg_d));
      } else {
        out["order"]           = group_order(gd);
        out["center_order"]    = center_order(gd);
        out["regular_numbers"] = integers_json(regular_numbers(gd));
        out["fundamentals"]    = integers_json(fundamentals(gd));
        out["classes"]         = regular_classes(gd);
      }
      emit(out);
      return 0;
    }
    if (pairs->parsed()) {
      auto found = isodiscriminantal_pairs(read_exceptional_table(table_path), caps);
      json out   = document("pairs");
      out["caps"] = {{"max_de", caps.max_de}, {"max_n", caps.max_n}};
      json list  = json::array();
      for (auto const& pr : found) {
        list.push_back({{"first", pr.first.name},
                        {"second", pr.second.name},
                        {"degrees", integers_json(pr.first.degrees)},
                        {"codegrees", integers_json(pr.first.codegrees)}});
      }
      out["count"] = found.size();
      out["pairs"] = list;
      emit(out);
      return 0;
    }
    if (typeb->parsed()) {
      auto pr  = typeb_presentation(n);
      json out = document("typeb");
      out["n"] = n;
      json rels = json::array();
      for (auto const& [lhs, rhs] : pr.relations()) {
        rels.push_back(pr.to_string(lhs) + " = " + pr.to_string(rhs));
      }
      out["relations"] = rels;
      out["delta"]     = pr.to_string(pr.delta());
      out["epsilon"]   = pr.to_string(epsilon_word(n));
      bool ok          = true;
      if (check_eps) {
        auto v = check_epsilon(n);
        out["check_epsilon"] = {{"simple_count", v.simple_count},
                                {"equals_delta", v.equals_delta},
                                {"delta_central", v.delta_central},
                                {"pass", v.ok()}};
        ok = v.ok();
      }
      if (!wd_word.empty()) {
        out["winding"] = winding(pr.parse_group_word(wd_word));
      }
      if (!member_word.empty()) {
        out["member"] = {{"e", e}, {"is_member", is_member(pr.parse_group_word(member_word), e)}};
      }
      emit(out);
      return ok ? 0 : 1;
    }
    for (auto const& name : scenario_names()) {
      if (app.got_subcommand(name)) {
        auto r = run_scenario(name, data_dir);
        emit(report_json(r, timings));
        return r.pass() ? 0 : 1;
      }
    }
  } catch (InputError const& err) {
    std::cerr << "garside: " << err.what() << '\n';
    return 2;
  } catch (ParseError const& err) {
    std::cerr << "garside: " << err.what() << '\n';
    return 2;
  } catch (BudgetExceeded const& err) {
    std::cerr << "garside: " << err.what() << '\n';
    return 2;
  } catch (AxiomViolation const& err) {
    std::cerr << "garside: " << err.what() << '\n';
    return 1;
  } catch (std::exception const& err) {
    std::cerr << "garside: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
