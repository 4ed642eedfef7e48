#include "hypca/oned.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "hypca/rules.hpp"

namespace hypca {

MissingRule1D::MissingRule1D(Triple t, int position)
    : std::runtime_error(fmt::format("no 1D rule for ({} {} {}) at position {}", t[0], t[1], t[2],
                                     position)),
      triple_(std::move(t)),
      position_(position) {}

std::vector<std::string> OneDAutomaton::symbols() const {
  auto s = alphabet;
  s.emplace_back(kHaltMarker);
  return s;
}

const std::string* OneDAutomaton::lookup(const Triple& t) const {
  auto it = rules.find(t);
  return it == rules.end() ? nullptr : &it->second;
}

OneDAutomaton parse_oned(std::string_view text) {
  OneDAutomaton m;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_halt = false;
  std::vector<std::pair<int, std::array<std::string, 4>>> raw;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "@alphabet") {
      m.alphabet.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "@blank") {
      if (tok.size() != 2) throw ParseError(lineno, "@blank takes one symbol");
      m.blank = tok[1];
    } else if (tok[0] == "@halt") {
      if (tok.size() != 4) throw ParseError(lineno, "@halt takes three symbols");
      m.halt_trigger = {tok[1], tok[2], tok[3]};
      have_halt = true;
    } else {
      if (tok.size() != 4) throw ParseError(lineno, "expected `x y z u`");
      raw.push_back({lineno, {tok[0], tok[1], tok[2], tok[3]}});
    }
  }
  if (m.alphabet.empty()) throw ParseError(lineno, "missing @alphabet");
  if (m.blank.empty()) throw ParseError(lineno, "missing @blank");
  if (!have_halt) throw ParseError(lineno, "missing @halt");
  std::set<std::string> known(m.alphabet.begin(), m.alphabet.end());
  if (known.count(std::string(OneDAutomaton::kHaltMarker)))
    throw ParseError(lineno, "H is reserved for the halt marker");
  if (!known.count(m.blank)) throw ParseError(lineno, "blank is not in the alphabet");
  for (const auto& s : m.halt_trigger)
    if (!known.count(s)) throw ParseError(lineno, fmt::format("unknown symbol '{}' in @halt", s));
  known.emplace(OneDAutomaton::kHaltMarker);
  m.rules[m.halt_trigger] = std::string(OneDAutomaton::kHaltMarker);
  for (const auto& [ln, r] : raw) {
    for (const auto& s : r)
      if (!known.count(s)) throw ParseError(ln, fmt::format("unknown symbol '{}'", s));
    const Triple t{r[0], r[1], r[2]};
    auto [it, inserted] = m.rules.try_emplace(t, r[3]);
    if (!inserted && it->second != r[3])
      throw ParseError(ln, fmt::format("({} {} {}) already maps to {}", r[0], r[1], r[2],
                                       it->second));
  }
  return m;
}

std::string serialize(const OneDAutomaton& m) {
  std::ostringstream os;
  os << "@alphabet";
  for (const auto& s : m.alphabet) os << ' ' << s;
  os << "\n@blank " << m.blank << "\n@halt " << m.halt_trigger[0] << ' ' << m.halt_trigger[1]
     << ' ' << m.halt_trigger[2] << '\n';
  for (const auto& [t, u] : m.rules)
    if (t != m.halt_trigger) os << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << u << '\n';
  return os.str();
}

Tape Tape::from_word(Word w, std::string blank) {
  Tape t;
  t.blank = std::move(blank);
  std::size_t lo = 0, hi = w.size();
  while (lo < hi && w[lo] == t.blank) ++lo;
  while (hi > lo && w[hi - 1] == t.blank) --hi;
  t.word.assign(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  t.origin_offset = t.word.empty() ? 0 : static_cast<int>(lo);
  return t;
}

const std::string& Tape::at(int pos) const {
  const int i = pos - origin_offset;
  if (i < 0 || i >= static_cast<int>(word.size())) return blank;
  return word[static_cast<std::size_t>(i)];
}

Word Tape::prefix(int n) const {
  Word w;
  w.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) w.push_back(at(i));
  return w;
}

Tape step_1d(const Tape& tape, const OneDAutomaton& m) {
  const int n = tape.end() + 1;
  Word out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Triple t{i > 0 ? tape.at(i - 1) : tape.blank, tape.at(i), tape.at(i + 1)};
    const std::string* u = m.lookup(t);
    if (!u) throw MissingRule1D(t, i);
    out.push_back(*u);
  }
  return Tape::from_word(std::move(out), tape.blank);
}

Run1D run_1d(const Tape& start, const OneDAutomaton& m, int horizon) {
  Run1D r;
  r.tapes.push_back(start);
  for (int t = 1; t <= horizon; ++t) {
    r.tapes.push_back(step_1d(r.tapes.back(), m));
    if (!r.halted_at && r.tapes[r.tapes.size() - 1] == r.tapes[r.tapes.size() - 2]) {
      r.halted_at = t;
      break;
    }
  }
  return r;
}

SlownessReport check_slowness(const OneDAutomaton& m, const Tape& start, int steps) {
  SlownessReport rep;
  Tape cur = start;
  int hull = cur.end();
  int last_growth = -1;
  for (int t = 1; t <= steps; ++t) {
    cur = step_1d(cur, m);
    if (cur.end() > hull) {
      if (cur.end() > hull + 1)
        rep.warnings.push_back(fmt::format("t={}: hull grew by {} cells", t, cur.end() - hull));
      if (last_growth >= 0 && t - last_growth < 4)
        rep.warnings.push_back(
            fmt::format("t={}: hull grew {} steps after the previous growth", t, t - last_growth));
      hull = cur.end();
      last_growth = t;
    }
  }
  rep.ok = rep.warnings.empty();
  return rep;
}

std::string join(const Word& w, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += w[i];
  }
  return s;
}

Word split_word(std::string_view s) {
  Word w;
  if (s.find_first_of(" \t") == std::string_view::npos) {
    for (char c : s) w.emplace_back(1, c);
    return w;
  }
  std::istringstream is{std::string(s)};
  for (std::string t; is >> t;) w.push_back(t);
  return w;
}

}  // namespace hypca
