#include <doctest.h>

#include "hypca/automata.hpp"
#include "hypca/oned.hpp"
#include "hypca/rules.hpp"

using namespace hypca;

namespace {

// x y z -> x xor z; the halt triple is unreachable
const char* kParity = R"(@alphabet _ a z
@blank _
@halt z z z
_ _ _ _
_ _ a a
_ a _ _
_ a a a
a _ _ a
a _ a _
a a _ a
a a a _
)";

}  // namespace

TEST_CASE("parse the walker") {
  const OneDAutomaton& m = stub_automaton();
  CHECK(m.alphabet.size() == 7);
  CHECK(m.blank == "_");
  CHECK(m.halt_trigger == Triple{"0", "T", "y"});
  CHECK(*m.lookup({"0", "T", "y"}) == "H");
  CHECK(*m.lookup({"_", "_", "_"}) == "_");
  CHECK(parse_oned(serialize(m)).rules == m.rules);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_oned("@blank _\n@halt _ _ _\n"), ParseError);
  CHECK_THROWS_AS(parse_oned("@alphabet _ H\n@blank _\n@halt _ _ _\n"), ParseError);
  CHECK_THROWS_AS(parse_oned("@alphabet _ a\n@blank _\n@halt _ _ _\n_ _ _ a\n_ _ _ _\n"), ParseError);
  CHECK_THROWS_AS(parse_oned("@alphabet _ a\n@blank _\n@halt _ _ _\n_ _ q _\n"), ParseError);
}

TEST_CASE("blank tape stays blank") {
  const Tape t = Tape::from_word({}, "_");
  CHECK(step_1d(t, stub_automaton()) == t);
}

TEST_CASE("tapes are trimmed") {
  const Tape t = Tape::from_word({"_", "_", "0", "_"}, "_");
  CHECK(t.origin_offset == 2);
  CHECK(t.word == Word{"0"});
  CHECK(t.at(2) == "0");
  CHECK(t.at(0) == "_");
  CHECK(t.at(-1) == "_");
  CHECK(t.prefix(4) == Word{"_", "_", "0", "_"});
}

TEST_CASE("single seed against hand enumeration") {
  // rule 90 restricted to the half line: x y z -> x xor z
  OneDAutomaton m = parse_oned(kParity);
  std::vector<int> cells(12, 0);
  cells[5] = 1;
  Tape t = Tape::from_word(split_word("_____a"), "_");
  for (int s = 1; s <= 5; ++s) {
    std::vector<int> nxt(12, 0);
    for (int i = 0; i < 11; ++i) nxt[i] = (i > 0 ? cells[i - 1] : 0) ^ cells[i + 1];
    cells = nxt;
    t = step_1d(t, m);
    for (int i = 0; i < 11; ++i) CHECK(t.at(i) == (cells[i] ? "a" : "_"));
  }
}

TEST_CASE("the origin is a fixed end") {
  // a cell at position 0 only sees a blank on its left
  OneDAutomaton m = parse_oned(kParity);
  Tape t = Tape::from_word({"a"}, "_");
  t = step_1d(t, m);
  CHECK(t.origin_offset == 1);
  CHECK(t.prefix(2) == Word{"_", "a"});
}

TEST_CASE("the halt trigger produces the marker") {
  const OneDAutomaton& m = stub_automaton();
  const Tape t = step_1d(Tape::from_word(split_word("_0Ty"), "_"), m);
  CHECK(t.at(2) == "H");
}

TEST_CASE("walker halts and then stays put") {
  const OneDAutomaton& m = stub_automaton();
  const Run1D r = run_1d(Tape::from_word(split_word("__0T__y"), "_"), m, 100);
  REQUIRE(r.halted_at);
  CHECK(*r.halted_at == 11);
  CHECK(r.tapes[9].at(5) == "H");
  CHECK(r.tapes[8].at(5) == "T");
  const Run1D never = run_1d(Tape::from_word(split_word("__0T"), "_"), m, 100);
  CHECK_FALSE(never.halted_at);
}

TEST_CASE("missing triples are reported with their position") {
  const OneDAutomaton m = parse_oned("@alphabet _ a\n@blank _\n@halt a a a\n_ _ _ _\n");
  try {
    step_1d(Tape::from_word({"_", "a"}, "_"), m);
    FAIL("no error");
  } catch (const MissingRule1D& e) {
    CHECK(e.position() == 0);
    CHECK(e.triple() == Triple{"_", "_", "a"});
  }
}

TEST_CASE("slowness check") {
  const OneDAutomaton& m = stub_automaton();
  CHECK(check_slowness(m, Tape::from_word(split_word("__0T"), "_"), 60).ok);
  // rule 90 spreads one cell per step
  const SlownessReport fast = check_slowness(parse_oned(kParity), Tape::from_word({"a"}, "_"), 6);
  CHECK_FALSE(fast.ok);
  CHECK_FALSE(fast.warnings.empty());
}
