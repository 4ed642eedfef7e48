#include <doctest.h>

#include <map>

#include "hypca/automata.hpp"
#include "hypca/engine.hpp"
#include "oracles.hpp"

using namespace hypca;

namespace {

const std::vector<std::string> kPrograms = {"______0T__y____", "______0T_____", "______0T______________y____"};

std::size_t ray_length(const Configuration& c) {
  std::size_t k = 0;
  while (c.at(ray_cell(k)) == "B" || c.at(ray_cell(k)) == "B0") ++k;
  return k;
}

}  // namespace

TEST_CASE("active set") {
  RegionGraph g;
  CHECK(active_set(Configuration{}, g).empty());
  Configuration one;
  one.set(CellAddress::center(), "W");
  CHECK(active_set(one, g).size() == 6);

  const Configuration f = fig1_configuration();
  RegionGraph r4 = RegionGraph::disk(5);
  std::set<CellAddress> brute;
  for (const auto& rec : r4.cells()) {
    if (!rec.resolved()) continue;
    bool live = f.at(rec.address) != f.blank();
    for (CellId n : rec.neighbors) live = live || f.at(r4.cell(n).address) != f.blank();
    if (live) brute.insert(rec.address);
  }
  CHECK(active_set(f, g) == brute);
}

TEST_CASE("step basics") {
  RegionGraph g;
  const RuleTable t = propagation_table();
  CHECK(step(Configuration{}, t, g).support_size() == 0);
  const Configuration f = fig1_configuration();
  const Configuration f1 = step(f, t, g);
  CHECK(f1.at(normalize(0, {})) == "W1");
  CHECK(f1.at(ray_cell(2)) == "B0");
  CHECK(f1.support_size() == 4);
}

TEST_CASE("step agrees with the linear-scan reference") {
  for (Variant v : {Variant::A13, Variant::B12, Variant::C9}) {
    const AutomatonSpec s = build(v, stub_automaton());
    Configuration c = prepare_initial(s, split_word(kPrograms[0])).config;
    RegionGraph g;
    for (int t = 0; t < 45; ++t) {
      Configuration ref;
      REQUIRE(oracle::step(c, s.rules, ref));
      const Configuration nxt = step(c, s, g, {}, t);
      REQUIRE(nxt == ref);
      c = nxt;
    }
  }
}

TEST_CASE("results do not depend on the side numbering") {
  const AutomatonSpec s = build_B(stub_automaton());
  const Configuration c0 = prepare_initial(s, split_word(kPrograms[0])).config;
  for (int shift = 1; shift < 5; ++shift) {
    Configuration a = c0, b = c0;
    for (int t = 0; t < 30; ++t) {
      Configuration na, nb;
      REQUIRE(oracle::step(a, s.rules, na, 0));
      REQUIRE(oracle::step(b, s.rules, nb, shift));
      std::map<int, std::multiset<std::string>> la, lb;
      for (const auto& [x, st] : na.cells()) la[x.level()].insert(st);
      for (const auto& [x, st] : nb.cells()) lb[x.level()].insert(st);
      CHECK(la == lb);
      a = na;
      b = nb;
    }
  }
}

TEST_CASE("pure propagation advances at speed one half") {
  const Trace tr = run(fig1_configuration(), propagation_table(), 40);
  CHECK_FALSE(tr.halted_at);
  const std::size_t len0 = ray_length(tr.initial);
  CHECK(len0 == 2);
  Configuration c = tr.initial;
  for (int t = 1; t <= 40; ++t) {
    for (const auto& ch : tr.steps[static_cast<std::size_t>(t - 1)]) c.set(ch.cell, ch.after);
    // the front grows on odd steps
    CHECK(ray_length(c) == len0 + static_cast<std::size_t>((t + 1) / 2));
  }
}

TEST_CASE("run: halting and budget") {
  const Trace blank = run(Configuration{}, propagation_table(), 10);
  REQUIRE(blank.halted_at);
  CHECK(*blank.halted_at == 1);
  const Trace prop = run(fig1_configuration(), propagation_table(), 50);
  CHECK_FALSE(prop.halted_at);
  CHECK(prop.length() == 50);
  CHECK_THROWS_AS(run(Configuration{}, propagation_table(), 0), std::invalid_argument);
}

TEST_CASE("B12 ends with the track only") {
  const AutomatonSpec s = build_B(stub_automaton());
  const Trace tr = run(prepare_initial(s, split_word(kPrograms[0])).config, s, 300);
  REQUIRE(tr.halted_at);
  const std::set<std::string> letters(s.embedded.alphabet.begin(), s.embedded.alphabet.end());
  for (const auto& [a, st] : tr.final_configuration().cells()) CHECK(letters.count(st));
}

TEST_CASE("support grows at most linearly and only next to itself") {
  const AutomatonSpec s = build_A(stub_automaton());
  const Trace tr = run(prepare_initial(s, split_word(kPrograms[1])).config, s, 80);
  Configuration c = tr.initial;
  const std::size_t s0 = c.support_size();
  for (int t = 1; t <= tr.length(); ++t) {
    std::set<CellAddress> reach;
    for (const auto& [a, st] : c.cells()) {
      reach.insert(a);
      for (const auto& n : neighbor_addresses(a)) reach.insert(n);
    }
    for (const auto& ch : tr.steps[static_cast<std::size_t>(t - 1)]) c.set(ch.cell, ch.after);
    for (const auto& [a, st] : c.cells()) CHECK(reach.count(a));
    CHECK(c.support_size() <= s0 + 5 * static_cast<std::size_t>(t));
  }
}

TEST_CASE("equal and serialisation") {
  const Configuration f = fig1_configuration();
  CHECK(equal(f, f));
  Configuration g = f;
  g.set(ray_cell(5), "B");
  CHECK_FALSE(equal(f, g));
  CHECK((serialize(f) == serialize(g)) == equal(f, g));
  CHECK(parse_configuration(serialize(g)) == g);
  Configuration h = f;
  h.set(ray_cell(0), "N");
  CHECK(h.support_size() == 2);
}

TEST_CASE("configuration file errors") {
  CHECK_THROWS_AS(parse_configuration("0:1\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("9:1 B\n"), ParseError);
  CHECK(parse_configuration("# comment\n0:1 B # trailing\n").support_size() == 1);
}

TEST_CASE("trace replay matches checkpoints") {
  const AutomatonSpec s = build_C(stub_automaton());
  RunOptions o;
  o.checkpoint_every = 7;
  const Trace tr = run(prepare_initial(s, split_word(kPrograms[0])).config, s, 60, o);
  Trace bare = tr;
  bare.checkpoints.clear();
  for (const auto& [t, c] : tr.checkpoints) CHECK(bare.at(t) == c);
  for (int t = 0; t <= tr.length(); ++t) CHECK(bare.at(t) == tr.at(t));
  CHECK_THROWS_AS(tr.at(tr.length() + 1), std::out_of_range);
}

TEST_CASE("track_of") {
  const AutomatonSpec s = build_B(stub_automaton());
  CHECK(track_of(Configuration{}, s).empty());
  CHECK(track_of(fig1_configuration("_", "W0"), s) == Word{"_", "_"});
  const Word w = split_word(kPrograms[0]);
  const Configuration c = prepare_initial(s, w).config;
  Word got = track_of(c, s);
  got.resize(w.size(), "_");
  CHECK(got == w);
  Configuration broken = c;
  broken.set(ray_cell(1), "W1");
  CHECK_THROWS_AS(track_of(broken, s), StructureError);
  // A13 has no holes in its track
  const AutomatonSpec a = build_A(stub_automaton());
  Configuration holed = prepare_initial(a, w).config;
  holed.set(ray_cell(4), "N");
  CHECK_THROWS_AS(track_of(holed, a), StructureError);
}

TEST_CASE("missing rules: strict and permissive") {
  Configuration odd;
  odd.set(CellAddress::center(), "W1");
  odd.set(CellAddress::root(0), "W1");
  const RuleTable t = propagation_table();
  try {
    run(odd, t, 5);
    FAIL("no error");
  } catch (const MissingRuleError& e) {
    CHECK(e.time() == 0);
    CHECK(e.partial.length() == 0);
    CHECK(e.partial.initial == odd);
  }
  RunOptions o;
  o.matching = Matching::Permissive;
  const Trace tr = run(odd, t, 5, o);
  CHECK(tr.missing_applied > 0);
}

TEST_CASE("unknown states are rejected") {
  Configuration c;
  c.set(CellAddress::center(), "Q");
  RegionGraph g;
  CHECK_THROWS_AS(step(c, propagation_table(), g), UnknownStateError);
}

TEST_CASE("prepare_initial") {
  const AutomatonSpec s = build_B(stub_automaton());
  const Preparation p = prepare_initial(s, split_word("___0T_y__"));
  CHECK(p.warnings.empty());
  CHECK(p.propagation_steps == 18);
  CHECK_FALSE(prepare_initial(s, split_word("_0T_y__")).warnings.empty());
  CHECK_THROWS_AS(prepare_initial(s, split_word("___0Q")), std::invalid_argument);
  CHECK_THROWS_AS(prepare_initial(s, split_word("___0T__y"), 2), std::invalid_argument);
}
