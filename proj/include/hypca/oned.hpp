#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypca {

using Word = std::vector<std::string>;
using Triple = std::array<std::string, 3>;

class MissingRule1D : public std::runtime_error {
 public:
  MissingRule1D(Triple t, int position);
  const Triple& triple() const { return triple_; }
  int position() const { return position_; }

 private:
  Triple triple_;
  int position_;
};

/// Radius-1 automaton on the half line. `(left, current, right) -> next`;
/// the halt trigger maps to the reserved marker H.
struct OneDAutomaton {
  static constexpr std::string_view kHaltMarker = "H";

  std::vector<std::string> alphabet;  // without H
  std::string blank;
  Triple halt_trigger;
  std::map<Triple, std::string> rules;  // includes halt_trigger -> H

  /// Alphabet plus H.
  std::vector<std::string> symbols() const;
  const std::string* lookup(const Triple& t) const;
};

/// `@alphabet`, `@blank`, `@halt x y z` headers, then `x y z u` lines;
/// `#` starts a comment. Throws ParseError.
OneDAutomaton parse_oned(std::string_view text);
std::string serialize(const OneDAutomaton& m);

/// Cells [origin_offset, origin_offset + word.size()) of the half line; all
/// others hold the blank. Leading and trailing blanks are trimmed.
struct Tape {
  std::string blank;
  Word word;
  int origin_offset = 0;

  static Tape from_word(Word w, std::string blank);
  const std::string& at(int pos) const;
  int end() const { return origin_offset + static_cast<int>(word.size()); }
  /// Positions 0 .. n-1.
  Word prefix(int n) const;
  friend bool operator==(const Tape&, const Tape&) = default;
};

/// One synchronous step. Position 0 sees the blank on its left; the origin
/// never moves.
Tape step_1d(const Tape& tape, const OneDAutomaton& m);

struct Run1D {
  std::vector<Tape> tapes;        // tapes[t] for t = 0..
  std::optional<int> halted_at;   // first t with tapes[t] == tapes[t-1]
};
Run1D run_1d(const Tape& start, const OneDAutomaton& m, int horizon);

struct SlownessReport {
  bool ok = true;
  std::vector<std::string> warnings;
};

/// The hull of the non-blank cells may only grow by one cell at a time, and
/// only after staying put for three steps.
SlownessReport check_slowness(const OneDAutomaton& m, const Tape& start, int steps);

std::string join(const Word& w, std::string_view sep = "");
/// Splits on whitespace, or into single characters when there is none.
Word split_word(std::string_view s);

}  // namespace hypca
