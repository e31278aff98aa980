#include "garside/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "garside/divided.hpp"
#include "garside/errors.hpp"
#include "garside/periodic.hpp"
#include "garside/presentation.hpp"
#include "garside/reflgroups.hpp"
#include "garside/series.hpp"
#include "garside/structure.hpp"

namespace garside {

  bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](Check const& c) { return c.pass; });
  }

  std::string data_directory() {
    if (auto const* env = std::getenv("GARSIDE_DATA_DIR");
        env != nullptr && *env != '\0') {
      return env;
    }
    return GARSIDE_DEFAULT_DATA_DIR;
  }

  std::vector<std::string> const& scenario_names() {
    static std::vector<std::string> const names = {
        "verify-g12", "verify-g13", "verify-typeb", "verify-regular",
        "verify-pairs"};
    return names;
  }

  namespace {
    struct Outcome {
      std::string expected;
      std::string actual;
    };

    class Runner {
     public:
      explicit Runner(std::string name) {
        _report.scenario = std::move(name);
      }

      void check(std::string id, std::string description,
                 std::function<Outcome()> const& f) {
        Check c;
        c.id          = std::move(id);
        c.description = std::move(description);
        auto start    = std::chrono::steady_clock::now();
        try {
          auto o     = f();
          c.expected = std::move(o.expected);
          c.actual   = std::move(o.actual);
          c.pass     = c.expected == c.actual;
        } catch (std::exception const& e) {
          c.actual = std::string("error: ") + e.what();
          c.pass   = false;
        }
        c.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        _report.checks.push_back(std::move(c));
      }

      VerificationReport finish() {
        std::sort(_report.checks.begin(), _report.checks.end(),
                  [](auto const& x, auto const& y) { return x.id < y.id; });
        return std::move(_report);
      }

     private:
      VerificationReport _report;
    };

    template <typename Range>
    std::string set_string(Range const& xs) {
      std::ostringstream out;
      out << "{";
      bool first = true;
      for (auto const& x : xs) {
        out << (first ? "" : ",") << x;
        first = false;
      }
      out << "}";
      return out.str();
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::string file_in(std::string const& dir, std::string const& name) {
      auto path = std::filesystem::path(dir) / name;
      if (!std::filesystem::is_regular_file(path)) {
        throw InputError("missing data file " + path.string());
      }
      return path.string();
    }

    // First entries of the tuples, as a sorted set of words.
    std::string first_entries(GarsideStructure const&          g,
                              std::vector<DividedTuple> const& ts) {
      std::set<std::string> out;
      for (auto const& t : ts) {
        out.insert(g.to_string(t.front()));
      }
      return set_string(out);
    }

    std::string category_summary(DividedCategory const& c) {
      std::size_t ids = std::count(c.identity.begin(), c.identity.end(), true);
      return "objects=" + std::to_string(c.objects.size()) + " generators="
             + std::to_string(c.morphisms.size() - ids) + " components="
             + std::to_string(components(c).size());
    }

    std::string relation_list(GarsideStructure const&     g,
                              DividedCategory const&      c,
                              CategoryPresentation const& p) {
      std::set<std::string> out;
      for (auto const& [lhs, rhs] : p.relations) {
        out.insert(path_label(g, c, lhs) + "=" + path_label(g, c, rhs));
      }
      return set_string(out);
    }

    std::size_t object_named(GarsideStructure const& g,
                             DividedCategory const&  c,
                             std::string const&      label) {
      for (std::size_t i = 0; i < c.objects.size(); ++i) {
        if (object_label(g, c, i) == label) {
          return i;
        }
      }
      throw Error("no object " + label);
    }

    std::string centralizer_string(GarsideStructure const&   g,
                                   CentralizerSummary const& s) {
      return "generators=" + std::to_string(s.simplified.generators.size())
             + " relators=" + std::to_string(s.simplified.relators.size())
             + " collapse="
             + (s.generator ? to_string(g, *s.generator) : std::string("-"));
    }

    std::string root_orders(GarsideStructure const& g, std::int64_t zp) {
      std::vector<std::int64_t> out;
      for (auto d : candidate_root_orders(g, zp)) {
        if (roots_report(g, zp, d).exists) {
          out.push_back(d);
        }
      }
      return set_string(out);
    }

    std::string axiom_string(AxiomReport const& r) {
      return "balanced=" + yes_no(r.balanced) + " lattice=" + yes_no(r.lattice)
             + " phi=" + yes_no(r.phi) + " simples="
             + std::to_string(r.simple_count)
             + " phi_order=" + std::to_string(r.phi_order);
    }

    std::string class_list(std::vector<integers> const& classes) {
      std::vector<std::string> parts;
      for (auto const& c : classes) {
        parts.push_back(set_string(c));
      }
      return set_string(parts);
    }

    // Shared part of the two rank two scenarios.
    struct RankTwo {
      std::string  prefix;
      std::string  group;
      std::int64_t zp;           // z_P = Delta^zp
      std::string  axioms;
      std::string  roots;        // expected {d : roots exist}
      std::string  candidates;
    };

    void rank_two_common(Runner&                       run,
                         RankTwo const&                want,
                         Presentation const&           p,
                         GarsideStructure const&       g,
                         std::vector<GroupData> const& table) {
      auto const& pre = want.prefix;
      run.check(pre + "-01-axioms", "Garside axioms hold exhaustively", [&] {
        return Outcome{want.axioms, axiom_string(verify_garside(p).axioms)};
      });
      run.check(pre + "-09-zp-central",
                "Delta^" + std::to_string(want.zp) + " is central", [&] {
                  return Outcome{"true", yes_no(is_central(g, delta_power(g, want.zp)))};
                });
      run.check(pre + "-30-candidates", "candidate root orders", [&] {
        return Outcome{want.candidates,
                       set_string(candidate_root_orders(g, want.zp))};
      });
      run.check(pre + "-31-roots", "orders d with d-th roots of z_P", [&] {
        return Outcome{want.roots, root_orders(g, want.zp)};
      });
      run.check(pre + "-32-regular",
                "regular numbers agree with existing roots", [&] {
                  return Outcome{root_orders(g, want.zp),
                                 set_string(regular_numbers(group_data(want.group, table)))};
                });
    }

    VerificationReport verify_g12(std::string const& dir) {
      auto const p     = read_presentation(file_in(dir, "g12.gar"));
      auto const table = read_exceptional_table(file_in(dir, "exceptional.txt"));
      auto const g     = build_garside(p);
      Runner     run("verify-g12");
      auto const stu = normal_form(g, p.parse_word("s t u"));
      rank_two_common(run,
                      {"g12", "G12", 6,
                       "balanced=true lattice=true phi=true simples=11 phi_order=3",
                       "{1,2,3,4,6,8}", "{1,2,3,4,6,8,12,24}"},
                      p, g, table);
      run.check("g12-02-stu4", "(stu)^4 = Delta^3", [&] {
        return Outcome{"Delta^3", to_string(g, power(g, stu, 4))};
      });
      run.check("g12-03-stu8", "(stu)^8 = Delta^6", [&] {
        return Outcome{"Delta^6", to_string(g, power(g, stu, 8))};
      });
      run.check("g12-04-central", "Delta^3 central, Delta not central", [&] {
        return Outcome{"true false",
                       yes_no(is_central(g, delta_power(g, 3))) + " "
                           + yes_no(is_central(g, delta_power(g, 1)))};
      });
      run.check("g12-10-d21", "D_2^1 empty", [&] {
        return Outcome{"0", std::to_string(divided_set(g, 2, 1).size())};
      });
      run.check("g12-11-d43", "D_4^3 = {s,t,u} (parametrized)", [&] {
        auto ts = divided_set(g, 4, 3);
        for (auto const& t : ts) {
          if (t[1] != g.phi(t[0]) || t[2] != g.phi(t[0], 2) || t[3] != t[0]) {
            return Outcome{"(x,phi x,phi^2 x,x)", "tuple of another shape"};
          }
        }
        return Outcome{"{s,t,u}", first_entries(g, ts)};
      });
      run.check("g12-12-d23", "D_2^3 = {st,tu,us} (parametrized)", [&] {
        return Outcome{"{st,tu,us}", first_entries(g, divided_set(g, 2, 3))};
      });
      run.check("g12-13-d41", "D_4^1 empty (no 24th roots)", [&] {
        return Outcome{"0", std::to_string(divided_set(g, 4, 1).size())};
      });
      for (auto [pp, qq] : std::vector<std::pair<int, int>>{{1, 3}, {1, 1}, {4, 3}}) {
        auto name = "C_" + std::to_string(pp) + "^" + std::to_string(qq);
        run.check("g12-14-connected-" + std::to_string(pp) + std::to_string(qq),
                  name + " connected", [&, pp = pp, qq = qq] {
                    auto c = build_category(g, pp, qq);
                    return Outcome{"1", std::to_string(components(c).size())};
                  });
      }
      run.check("g12-15-c12", "C_1^2 vertex group infinite cyclic, generated by Delta", [&] {
        auto c = build_category(g, 1, 2);
        auto s = centralizer_summary(g, c, 0);
        return Outcome{"generators=1 relators=0 collapse=Delta",
                       centralizer_string(g, s)};
      });
      run.check("g12-20-c23", "C_2^3 has 3 objects and 6 generating morphisms", [&] {
        return Outcome{"objects=3 generators=6 components=1",
                       category_summary(build_category(g, 2, 3))};
      });
      run.check("g12-21-c23-relations", "C_2^3 relations", [&] {
        auto c = build_category(g, 2, 3);
        return Outcome{"{(s,t)(t,u)=(st,1),(t,u)(u,s)=(tu,1),(u,s)(s,t)=(us,1)}",
                       relation_list(g, c, reduced_presentation(c))};
      });
      run.check("g12-22-c23-centralizer", "C_2^3 centralizer cyclic, collapse stu", [&] {
        auto c = build_category(g, 2, 3);
        auto s = centralizer_summary(g, c, object_named(g, c, "st"));
        return Outcome{"generators=1 relators=0 collapse=stu",
                       centralizer_string(g, s)};
      });
      run.check("g12-33-bezout", "Bezout root of (stu, Delta^3) for (8, 2)", [&] {
        auto r = bezout_root(g, stu, delta_power(g, 3), 8, 2, delta_power(g, 6));
        return Outcome{"stu", to_string(g, r.root)};
      });
      return run.finish();
    }

    VerificationReport verify_g13(std::string const& dir) {
      auto const p     = read_presentation(file_in(dir, "g13.gar"));
      auto const table = read_exceptional_table(file_in(dir, "exceptional.txt"));
      auto const g     = build_garside(p);
      Runner     run("verify-g13");
      auto const abc = normal_form(g, p.parse_word("a b c"));
      rank_two_common(run,
                      {"g13", "G13", 4,
                       "balanced=true lattice=true phi=true simples=90 phi_order=1",
                       "{1,2,3,4,6,12}", "{1,2,3,4,6,9,12,18,36}"},
                      p, g, table);
      run.check("g13-02-abc3", "(abc)^3 = Delta", [&] {
        return Outcome{"Delta", to_string(g, power(g, abc, 3))};
      });
      run.check("g13-03-abc12", "(abc)^12 = Delta^4", [&] {
        return Outcome{"Delta^4", to_string(g, power(g, abc, 12))};
      });
      run.check("g13-04-central", "Delta central", [&] {
        return Outcome{"true", yes_no(is_central(g, delta_power(g, 1)))};
      });
      run.check("g13-10-d32", "D_3^2 = {abc,bca,cab} (parametrized)", [&] {
        return Outcome{"{abc,bca,cab}", first_entries(g, divided_set(g, 3, 2))};
      });
      run.check("g13-11-d31", "D_3^1 = {abc,bca,cab} (parametrized)", [&] {
        return Outcome{"{abc,bca,cab}", first_entries(g, divided_set(g, 3, 1))};
      });
      run.check("g13-12-d94", "D_9^4 empty (no 9th roots)", [&] {
        return Outcome{"0", std::to_string(divided_set(g, 9, 4).size())};
      });
      run.check("g13-13-order", "|G13| = 96, not divisible by 9", [&] {
        auto n = group_order(group_data("G13", table));
        return Outcome{"96 false", std::to_string(n) + " " + yes_no(n % 9 == 0)};
      });
      for (auto [pp, qq] : std::vector<std::pair<int, int>>{{3, 2}, {3, 1}}) {
        auto name = "C_" + std::to_string(pp) + "^" + std::to_string(qq);
        run.check("g13-14-connected-" + std::to_string(pp) + std::to_string(qq),
                  name + " connected", [&, pp = pp, qq = qq] {
                    auto c = build_category(g, pp, qq);
                    return Outcome{"1", std::to_string(components(c).size())};
                  });
      }
      run.check("g13-20-c34", "C_3^4 has 3 objects and 6 generating morphisms", [&] {
        auto c  = build_category(g, 3, 4);
        auto rp = reduced_presentation(c);
        return Outcome{"objects=3 generators=6 relations=6",
                       "objects=" + std::to_string(c.objects.size())
                           + " generators=" + std::to_string(rp.generators.size())
                           + " relations=" + std::to_string(rp.relations.size())};
      });
      run.check("g13-21-c34-relations", "C_3^4 relations", [&] {
        auto c = build_category(g, 3, 4);
        return Outcome{"{(a,bc)(b,ca)=(ab,c),(ab,c)(c,ab)=(a,bc)(bc,a),"
                       "(b,ca)(c,ab)=(bc,a),(bc,a)(a,bc)=(b,ca)(ca,b),"
                       "(c,ab)(a,bc)=(ca,b),(ca,b)(b,ca)=(c,ab)(ab,c)}",
                       relation_list(g, c, reduced_presentation(c))};
      });
      run.check("g13-22-c34-centralizer", "C_3^4 centralizer cyclic, collapse abc", [&] {
        auto c = build_category(g, 3, 4);
        auto s = centralizer_summary(g, c, object_named(g, c, "abc"));
        return Outcome{"generators=1 relators=0 collapse=abc",
                       centralizer_string(g, s)};
      });
      return run.finish();
    }

    VerificationReport verify_typeb() {
      Runner run("verify-typeb");
      for (std::size_t n : {2, 3}) {
        auto const tag = "typeb-0" + std::to_string(n);
        run.check(tag + "-axioms", "type B, n=" + std::to_string(n)
                                        + ": Garside axioms hold", [n] {
          auto r = verify_garside(typeb_presentation(n)).axioms;
          return Outcome{"balanced=true lattice=true phi=true simples="
                             + std::string(n == 2 ? "8" : "48") + " phi_order=1",
                         axiom_string(r)};
        });
        run.check(tag + "-epsilon", "type B, n=" + std::to_string(n)
                                         + ": epsilon^n = Delta, Delta central", [n] {
          auto v = check_epsilon(n);
          return Outcome{"true true", yes_no(v.equals_delta) + " " + yes_no(v.delta_central)};
        });
      }
      run.check("typeb-02-syntactic", "epsilon^2 = Delta is the first relation", [] {
        return Outcome{"true", yes_no(check_epsilon(2).syntactic)};
      });
      run.check("typeb-10-winding", "wd(epsilon) = 1, wd(z) = e, wd(t_i) = 0", [] {
        std::string actual = std::to_string(winding(epsilon_word(3)));
        for (std::int64_t e : {1, 2, 5}) {
          actual += " " + std::to_string(winding(z_word(e)));
        }
        for (std::int64_t i : {1, 2, 3}) {
          actual += " " + std::to_string(winding(t_word(i)));
        }
        return Outcome{"1 1 2 5 0 0 0", actual};
      });
      run.check("typeb-11-membership", "lambda = epsilon^e is a member, epsilon is not for e = 2", [] {
        std::string actual;
        for (std::int64_t e : {2, 3, 4}) {
          group_word lambda;
          for (std::int64_t k = 0; k < e; ++k) {
            auto eps = epsilon_word(3);
            lambda.insert(lambda.end(), eps.begin(), eps.end());
          }
          actual += yes_no(is_member(lambda, e)) + " ";
        }
        actual += yes_no(is_member(epsilon_word(3), 2));
        return Outcome{"true true true false", actual};
      });
      return run.finish();
    }

    VerificationReport verify_regular(std::string const& dir) {
      auto const table = read_exceptional_table(file_in(dir, "exceptional.txt"));
      Runner     run("verify-regular");
      auto const g12  = group_data("G12", table);
      auto const g13  = group_data("G13", table);
      auto const dih  = group_data("G(12,12,2)", table);
      run.check("regular-01-g12-data", "G12 degrees and codegrees", [&] {
        return Outcome{"{6,8} {0,10}", set_string(g12.degrees) + " " + set_string(g12.codegrees)};
      });
      run.check("regular-02-g12", "G12 regular numbers, fundamentals, classes", [&] {
        return Outcome{"{1,2,3,4,6,8} {2,6,8} {{1,2},{3,6},{4,8}}",
                       set_string(regular_numbers(g12)) + " " + set_string(fundamentals(g12))
                           + " " + class_list(regular_classes(g12))};
      });
      run.check("regular-03-g13", "G13 regular numbers, fundamentals, classes", [&] {
        return Outcome{"{1,2,3,4,6,12} {4,12} {{1,2,4},{3,6,12}}",
                       set_string(regular_numbers(g13)) + " " + set_string(fundamentals(g13))
                           + " " + class_list(regular_classes(g13))};
      });
      run.check("regular-04-divisibility", "divisibility classes match for G12 and G13", [&] {
        return Outcome{class_list(regular_classes(g12)) + " " + class_list(regular_classes(g13)),
                       class_list(divisibility_classes(g12)) + " "
                           + class_list(divisibility_classes(g13))};
      });
      run.check("regular-05-orders", "group and center orders of G12, G13", [&] {
        return Outcome{"48 2 96 4", std::to_string(group_order(g12)) + " "
                                        + std::to_string(center_order(g12)) + " "
                                        + std::to_string(group_order(g13)) + " "
                                        + std::to_string(center_order(g13))};
      });
      run.check("regular-06-dihedral", "G(12,12,2): 3 and 4 share fundamental 12, no unique minimum", [&] {
        auto r3 = regularity(dih, 3);
        auto r4 = regularity(dih, 4);
        return Outcome{"{2,12} {0,10} 12 12 none",
                       set_string(dih.degrees) + " " + set_string(dih.codegrees) + " "
                           + std::to_string(r3.fundamental.value_or(0)) + " "
                           + std::to_string(r4.fundamental.value_or(0)) + " "
                           + (r3.class_minimum ? std::to_string(*r3.class_minimum) : "none")};
      });
      run.check("regular-07-exceptional-minima", "every class of every exceptional group has a unique minimum", [&] {
        std::vector<std::string> bad;
        for (auto const& gd : table) {
          for (auto d : regular_numbers(gd)) {
            if (!regularity(gd, d).class_minimum) {
              bad.push_back(gd.name + ":" + std::to_string(d));
            }
          }
        }
        return Outcome{"{}", set_string(bad)};
      });
      return run.finish();
    }

    VerificationReport verify_pairs(std::string const& dir) {
      auto const table = read_exceptional_table(file_in(dir, "exceptional.txt"));
      Runner     run("verify-pairs");
      run.check("pairs-01-default-caps", "isodiscriminantal pairs, max_de=120, max_n=10", [&] {
        std::vector<std::string> got;
        for (auto const& pr : isodiscriminantal_pairs(table)) {
          got.push_back(pr.first.name + "~" + pr.second.name);
        }
        return Outcome{"{G5~G(6,1,2),G7~G(12,2,2),G10~G(12,1,2),G11~G(24,2,2),"
                       "G15~G(24,4,2),G18~G(30,1,2),G19~G(60,2,2),G26~G(6,1,3),"
                       "G(1,1,3)~G(3,3,2),G(1,1,4)~G(2,2,3),G(2,1,2)~G(4,4,2)}",
                       set_string(got)};
      });
      return run.finish();
    }
  }  // namespace

  VerificationReport run_scenario(std::string const& name,
                                  std::string const& data_dir) {
    if (name == "verify-g12") {
      return verify_g12(data_dir);
    }
    if (name == "verify-g13") {
      return verify_g13(data_dir);
    }
    if (name == "verify-typeb") {
      return verify_typeb();
    }
    if (name == "verify-regular") {
      return verify_regular(data_dir);
    }
    if (name == "verify-pairs") {
      return verify_pairs(data_dir);
    }
    throw InputError("unknown scenario \"" + name + "\"");
  }

}  // namespace garside
