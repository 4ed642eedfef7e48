#include <doctest.h>

#include "hypca/automata.hpp"
#include "hypca/compare.hpp"
#include "hypca/data.hpp"
#include "hypca/engine.hpp"

using namespace hypca;

namespace {

bool has_rule(const RuleTable& t, const char* cur, std::array<const char*, 5> nb, const char* next) {
  std::array<std::string, 5> n;
  for (int k = 0; k < 5; ++k) n[k] = nb[k];
  try {
    return t.match(cur, n) == next;
  } catch (const MissingRule&) {
    return false;
  }
}

// Non-growing automaton over {_, a, b}: `ab` pairs swap, `aaa` erodes its
// middle, `bab` halts, cells next to the halt marker freeze.
std::string erode_text() {
  const char* letters[] = {"_", "a", "b", "H"};
  std::string text = "@alphabet _ a b\n@blank _\n@halt b a b\n";
  for (const char* x : letters)
    for (const char* y : letters)
      for (const char* z : letters) {
        const std::string X = x, Y = y, Z = z;
        if (X == "b" && Y == "a" && Z == "b") continue;
        std::string u = Y;
        if (X == "H" || Z == "H") {
        } else if (Y == "a") {
          if (X == "a" && Z == "a") u = "_";
          else if (Z == "b") u = "b";
        } else if (Y == "b" && X == "a") {
          u = "a";
        }
        text += X + " " + Y + " " + Z + " " + u + "\n";
      }
  return text;
}

}  // namespace

TEST_CASE("lift_track_rule") {
  const SymbolicRule r = lift_track_rule("_", "_", "A", "_", "W");
  CHECK(r.current == "_");
  CHECK(r.nbrs == std::array<std::string, 5>{"_", "W", "A", "N", "N"});
  CHECK(r.next == "_");
  CHECK(r.flag == 0);
  CHECK(lift_track_rule("_", "1", "x", "A", "T").flag == 1);
  const AutomatonSpec b = build_B(stub_automaton());
  CHECK(has_rule(b.table, "_", {"_", "W", "_", "N", "N"}, "_"));
  // the same rule in C9, as one row of the propagation table reads it
  const AutomatonSpec c = build_C(stub_automaton());
  CHECK(has_rule(c.table, "_", {"N", "N", "_", "T", "A"}, "_"));
}

TEST_CASE("instantiation of the generic track symbol") {
  const OneDAutomaton& m = stub_automaton();
  const auto one = parse_rule_document("1 W B N N N N W\n").rules;
  CHECK(instantiate_generic(one, m, {"W"}).size() == m.alphabet.size());
  CHECK(instantiate_generic(one, m, {}).size() == 1);
  const auto two = parse_rule_document("1 W B B N N N W\n").rules;
  const auto inst = instantiate_generic(two, m, {"W"});
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].nbrs[0] == "_");
  const auto cell = parse_rule_document("1 B B W N N N B\n").rules;
  const auto ic = instantiate_generic(cell, m, {"W"});
  REQUIRE(ic.size() == 1);
  CHECK(ic[0].current == "_");
  CHECK(ic[0].next == "_");
  CHECK(ic[0].nbrs[0] == "_");
  // a blank cell next to the seed states sees a blank track cell
  const auto seed = parse_rule_document("0 N B W0 N N N N\n").rules;
  CHECK(instantiate_generic(seed, m, {"W"}).size() == 1);
  const auto far = parse_rule_document("0 N B W N N N N\n").rules;
  CHECK(instantiate_generic(far, m, {"W"}).size() == m.alphabet.size());
}

TEST_CASE("A13 contents") {
  const AutomatonSpec a = build_A(stub_automaton());
  CHECK(a.state_count() == 13);
  CHECK(has_rule(a.table, "W", {"H", "W", "N", "N", "W"}, "H"));
  CHECK(has_rule(a.table, "W1", {"B0", "H", "N", "N", "N"}, "H"));
  CHECK(has_rule(a.table, "T", {"0", "W", "y", "N", "N"}, "H"));
  CHECK(validate(a.table).conflicts.empty());
  CHECK(validate(a.table).has_quiescence);
}

TEST_CASE("B12 contents") {
  const AutomatonSpec b = build_B(stub_automaton());
  CHECK(b.state_count() == 12);
  CHECK(has_rule(b.table, "W", {"_", "W", "N", "N", "N"}, "N"));
  CHECK(has_rule(b.table, "T", {"0", "W", "y", "N", "N"}, "N"));
  CHECK_FALSE(b.table.alphabet().find("H"));
  for (const auto& r : b.rules) {
    CHECK(r.current != "H");
    CHECK(r.next != "H");
  }
  // the cancelled rule is gone; its key now belongs to the propagation
  CHECK(has_rule(b.table, "N", {"W1", "N", "N", "N", "N"}, "W0"));
  CHECK(validate(b.table).conflicts.empty());
}

TEST_CASE("C9 contents") {
  const AutomatonSpec c = build_C(stub_automaton());
  CHECK(c.state_count() == 9);
  CHECK(has_rule(c.table, "T", {"N", "N", "T", "N", "T"}, "N"));
  CHECK(has_rule(c.table, "T", {"0", "0", "0", "_", "_"}, "T"));
  CHECK(has_rule(c.table, "T", {"T", "T", "T", "N", "N"}, "T"));
  CHECK(c.table.alphabet().find("W1"));
  CHECK_FALSE(c.table.alphabet().find("W"));
  CHECK(validate(c.table).conflicts.empty());
  CHECK(c.scaffold_states() == std::set<std::string>{"W1"});
}

TEST_CASE("every row of table4.rules is a rule of C9") {
  const AutomatonSpec c = build_C(stub_automaton());
  const auto rows = rename_rules(parse_rule_document(data::table4()).rules, {{"B", "_"}});
  REQUIRE(rows.size() == 27);
  for (const auto& r : rows) {
    CAPTURE(r.line);
    CHECK(c.table.match(r.current, r.nbrs) == r.next);
  }
}

TEST_CASE("C9 contains the renamed image of B12") {
  const AutomatonSpec b = build_B(stub_automaton());
  const AutomatonSpec c = build_C(stub_automaton());
  const SymbolMap map = b_to_c_map(stub_automaton());
  for (const auto& r : rename_rules(b.rules, map)) CHECK(c.table.match(r.current, r.nbrs) == r.next);
}

TEST_CASE("rename_config") {
  const Configuration f = fig1_configuration();
  CHECK(rename_config(f, identity_map({"B", "W0", "N"})) == f);
  const Configuration g = rename_config(f, {{"B", "B"}, {"W0", "0"}, {"N", "N"}});
  CHECK(g.support_size() == f.support_size());
  CHECK(g.at(normalize(0, {})) == "0");
  const SymbolMap m = {{"B", "B"}, {"W0", "0"}, {"N", "N"}};
  CHECK(rename_config(rename_config(f, m), invert(m)) == f);
  CHECK_THROWS_AS(rename_config(f, {{"B", "B"}}), RenameError);
  CHECK_THROWS_AS(invert(b_to_c_map(stub_automaton())), RenameError);
}

TEST_CASE("the ray is a path of adjacent cells") {
  for (std::size_t k = 0; k + 1 < 30; ++k) {
    const auto nb = neighbor_addresses(ray_cell(k));
    CHECK(std::count(nb.begin(), nb.end(), ray_cell(k + 1)) == 1);
  }
}

TEST_CASE("a different embedded automaton is carried faithfully") {
  const OneDAutomaton m = parse_oned(erode_text());
  const Word word = split_word("___abaaab_aab_b_______");
  CHECK(check_slowness(m, Tape::from_word(word, "_"), 60).ok);
  for (Variant v : {Variant::A13, Variant::B12, Variant::C9}) {
    CAPTURE(variant_name(v));
    const AutomatonSpec spec = build(v, m);
    const Preparation p = prepare_initial(spec, word);
    const Trace tr = run(p.config, spec, 120);
    const ComparisonReport rep = compare_runs(tr, spec, m, 120);
    CHECK_MESSAGE(rep.ok(), rep.describe());
  }
}

TEST_CASE("build fails loudly on a clashing embedded alphabet") {
  // a letter named like a support state makes lifted rules collide
  const OneDAutomaton m = parse_oned("@alphabet _ W\n@blank _\n@halt W W W\n_ _ _ _\n_ W _ _\n_ _ W _\nW _ _ _\n");
  CHECK_THROWS_AS(build_A(m), BuildError);
  try {
    build_A(m);
  } catch (const BuildError& e) {
    CHECK_FALSE(e.conflicts().empty());
  }
}

TEST_CASE("the seed in every variant") {
  for (Variant v : {Variant::A13, Variant::B12, Variant::C9}) {
    const AutomatonSpec s = build(v, stub_automaton());
    const Configuration f = fig1_configuration(s.embedded.blank, s.ray_seed);
    CHECK(f.at(normalize(0, {})) == s.ray_seed);
    CHECK(track_of(f, s) == Word{"_", "_"});
  }
}
