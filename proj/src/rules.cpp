#include "hypca/rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace hypca {

Alphabet::Alphabet(std::vector<std::string> names, std::string_view blank) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() >= kNoState) throw std::invalid_argument("alphabet too large");
  names_ = std::move(names);
  auto b = find(blank);
  if (!b) throw std::invalid_argument(fmt::format("blank '{}' is not a state", blank));
  blank_ = *b;
}

std::optional<StateId> Alphabet::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

StateId Alphabet::id(std::string_view name) const {
  auto r = find(name);
  if (!r) throw std::out_of_range(fmt::format("unknown state '{}'", name));
  return *r;
}

ParseError::ParseError(int line, const std::string& msg)
    : std::runtime_error(fmt::format("line {}: {}", line, msg)), line_(line) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

RuleDocument parse_rule_document(std::string_view text) {
  RuleDocument doc;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto c = line.find("--"); c != std::string_view::npos) line = line.substr(0, c);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "@states") {
      doc.declared_states.insert(doc.declared_states.end(), tok.begin() + 1, tok.end());
      continue;
    }
    if (tok[0] == "@blank") {
      if (tok.size() != 2) throw ParseError(lineno, "@blank takes one state");
      doc.blank = tok[1];
      continue;
    }
    if (tok[0].starts_with('@')) throw ParseError(lineno, fmt::format("unknown header {}", tok[0]));
    if (tok.size() != 8)
      throw ParseError(lineno, fmt::format("expected 8 fields, found {}", tok.size()));
    SymbolicRule r;
    if (tok[0].size() != 1 || tok[0][0] < '0' || tok[0][0] > '2')
      throw ParseError(lineno, fmt::format("flag must be 0, 1 or 2, found '{}'", tok[0]));
    r.flag = tok[0][0] - '0';
    r.current = tok[1];
    for (int k = 0; k < 5; ++k) r.nbrs[k] = tok[2 + k];
    r.next = tok[7];
    r.line = lineno;
    doc.rules.push_back(std::move(r));
  }
  if (!doc.declared_states.empty()) {
    std::set<std::string> decl(doc.declared_states.begin(), doc.declared_states.end());
    for (const auto& r : doc.rules) {
      auto check = [&](const std::string& s) {
        if (!decl.count(s)) throw ParseError(r.line, fmt::format("undeclared state '{}'", s));
      };
      check(r.current);
      for (const auto& n : r.nbrs) check(n);
      check(r.next);
    }
  }
  return doc;
}

int canonical_shift(const Neighborhood& n) {
  int best = 0;
  for (int k = 1; k < 5; ++k) {
    for (int i = 0; i < 5; ++i) {
      const StateId a = n[(k + i) % 5], b = n[(best + i) % 5];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  return best;
}

Neighborhood canonical_rotation(const Neighborhood& n) {
  const int k = canonical_shift(n);
  Neighborhood out;
  for (int i = 0; i < 5; ++i) out[i] = n[(k + i) % 5];
  return out;
}

MissingRule::MissingRule(std::string current, std::array<std::string, 5> nbrs)
    : std::runtime_error(fmt::format("no rule for {} with neighbours ({} {} {} {} {})", current,
                                     nbrs[0], nbrs[1], nbrs[2], nbrs[3], nbrs[4])),
      current_(std::move(current)),
      nbrs_(std::move(nbrs)) {}

std::uint64_t RuleTable::key(StateId current, const Neighborhood& c) {
  std::uint64_t k = current;
  for (StateId s : c) k = (k << 8) | s;
  return k;
}

RuleTable::RuleTable(const std::vector<SymbolicRule>& rules, std::string_view blank,
                     const std::vector<std::string>& declared) {
  std::vector<std::string> names = declared;
  names.emplace_back(blank);
  for (const auto& r : rules) {
    names.push_back(r.current);
    names.insert(names.end(), r.nbrs.begin(), r.nbrs.end());
    names.push_back(r.next);
  }
  alphabet_ = Alphabet(std::move(names), blank);
  rules_.reserve(rules.size());
  for (const auto& s : rules) {
    Rule r;
    r.flag = s.flag;
    r.current = alphabet_.id(s.current);
    for (int k = 0; k < 5; ++k) r.nbrs[k] = alphabet_.id(s.nbrs[k]);
    r.next = alphabet_.id(s.next);
    r.line = s.line;
    index_.try_emplace(key(r.current, canonical_rotation(r.nbrs)), rules_.size());
    rules_.push_back(r);
  }

  auto dense = std::make_shared<std::vector<std::uint8_t>>();
  const std::size_t S = alphabet_.size();
  if (S <= kDenseMaxStates) {
    std::size_t total = S;
    for (int k = 0; k < 5; ++k) total *= S;
    // padded so that 32-bit gathers at the last index stay in bounds
    dense->assign(total + 4, kNoState);
    for (const auto& [k, i] : index_) {
      const Rule& r = rules_[i];
      for (int rot = 0; rot < 5; ++rot) {
        std::size_t idx = r.current;
        for (int j = 0; j < 5; ++j) idx = idx * S + r.nbrs[(rot + j) % 5];
        (*dense)[idx] = r.next;
      }
    }
  }
  dense_ = std::move(dense);
}

std::optional<StateId> RuleTable::lookup(StateId current, const Neighborhood& nbrs) const {
  auto it = index_.find(key(current, canonical_rotation(nbrs)));
  if (it == index_.end()) return std::nullopt;
  return rules_[it->second].next;
}

StateId RuleTable::match(StateId current, const Neighborhood& nbrs) const {
  if (auto r = lookup(current, nbrs)) return *r;
  std::array<std::string, 5> names;
  for (int k = 0; k < 5; ++k) names[k] = alphabet_.name(nbrs[k]);
  throw MissingRule(alphabet_.name(current), names);
}

std::string RuleTable::match(std::string_view current,
                             const std::array<std::string, 5>& nbrs) const {
  auto cur = alphabet_.find(current);
  Neighborhood n{};
  bool known = cur.has_value();
  for (int k = 0; k < 5 && known; ++k) {
    auto s = alphabet_.find(nbrs[k]);
    if (!s) known = false;
    else n[k] = *s;
  }
  if (!known) throw MissingRule(std::string(current), nbrs);
  return alphabet_.name(match(*cur, n));
}

SymbolicRule RuleTable::symbolic(const Rule& r) const {
  SymbolicRule s;
  s.flag = r.flag;
  s.current = alphabet_.name(r.current);
  for (int k = 0; k < 5; ++k) s.nbrs[k] = alphabet_.name(r.nbrs[k]);
  s.next = alphabet_.name(r.next);
  s.line = r.line;
  return s;
}

RuleTable parse_table(std::string_view text) {
  RuleDocument doc = parse_rule_document(text);
  if (doc.rules.empty()) throw ParseError(1, "no rules (a table needs at least its quiescence rule)");
  std::string blank;
  if (doc.blank) {
    blank = *doc.blank;
  } else {
    bool has_n = false;
    for (const auto& r : doc.rules)
      has_n = has_n || r.current == "N" || r.next == "N" ||
              std::find(r.nbrs.begin(), r.nbrs.end(), "N") != r.nbrs.end();
    if (!has_n) throw ParseError(1, "no @blank header and no state N");
    blank = "N";
  }
  if (!doc.declared_states.empty() &&
      std::find(doc.declared_states.begin(), doc.declared_states.end(), blank) ==
          doc.declared_states.end())
    throw ParseError(1, fmt::format("blank '{}' is not declared", blank));
  return RuleTable(doc.rules, blank, doc.declared_states);
}

std::string format_rule(const RuleTable& t, const Rule& r) {
  const auto& a = t.alphabet();
  std::string s = fmt::format("{} {:<3}", r.flag, a.name(r.current));
  for (StateId n : r.nbrs) s += fmt::format(" {:<3}", a.name(n));
  s += fmt::format(" {}", a.name(r.next));
  return s;
}

std::string serialize(const RuleTable& table) {
  std::ostringstream os;
  os << "@states";
  for (const auto& n : table.alphabet().names()) os << ' ' << n;
  os << "\n@blank " << table.alphabet().blank_name() << '\n';
  for (const auto& r : table.rules()) os << format_rule(table, r) << '\n';
  return os.str();
}

ValidationReport validate(const RuleTable& table) {
  ValidationReport rep;
  std::unordered_map<std::uint64_t, std::size_t> first;
  const auto& rules = table.rules();
  const StateId blank = table.alphabet().blank();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    std::uint64_t k = r.current;
    for (StateId s : canonical_rotation(r.nbrs)) k = (k << 8) | s;
    auto [it, inserted] = first.try_emplace(k, i);
    if (!inserted) {
      const Rule& f = rules[it->second];
      (f.next == r.next ? rep.duplicates : rep.conflicts).push_back({f, r});
    }
    if (r.current == blank && r.next == blank &&
        std::all_of(r.nbrs.begin(), r.nbrs.end(), [&](StateId s) { return s == blank; }))
      rep.has_quiescence = true;
    if ((r.flag == 0) != (r.current == r.next)) rep.flag_mismatches.push_back(r);
  }
  return rep;
}

std::string ValidationReport::describe(const RuleTable& t) const {
  std::ostringstream os;
  os << fmt::format("{} rules, {} states, {} conflicts, {} duplicates, quiescence {}\n", t.size(),
                    t.alphabet().size(), conflicts.size(), duplicates.size(),
                    has_quiescence ? "present" : "missing");
  for (const auto& c : conflicts)
    os << fmt::format("conflict: line {}: {}\n          line {}: {}\n", c.first.line,
                      format_rule(t, c.first), c.second.line, format_rule(t, c.second));
  for (const auto& r : flag_mismatches)
    os << fmt::format("flag: line {}: {}\n", r.line, format_rule(t, r));
  return os.str();
}

}  // namespace hypca
